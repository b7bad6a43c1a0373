#pragma once

#include "tiltwalk/asymptotics.hpp"
#include "tiltwalk/io.hpp"
#include "tiltwalk/numeric.hpp"
#include "tiltwalk/roots.hpp"
#include "tiltwalk/series.hpp"
#include "tiltwalk/sl2_tilting.hpp"
#include "tiltwalk/walks.hpp"
