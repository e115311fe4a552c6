#pragma once

#include "udim/error.hpp"
#include "udim/graph.hpp"
#include "udim/families.hpp"
#include "udim/vecneg.hpp"
#include "udim/embed.hpp"
#include "udim/search.hpp"
#include "udim/io.hpp"
