#ifndef FTOP_FTOP_HPP_
#define FTOP_FTOP_HPP_

#include "ftop/catalog.hpp"
#include "ftop/dsl.hpp"
#include "ftop/dsl_check.hpp"
#include "ftop/enumerate.hpp"
#include "ftop/error.hpp"
#include "ftop/fixtures.hpp"
#include "ftop/lab.hpp"
#include "ftop/map_classes.hpp"
#include "ftop/serialize.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/space.hpp"
#include "ftop/space_map.hpp"
#include "ftop/space_properties.hpp"
#include "ftop/subset.hpp"
#include "ftop/universe.hpp"

#endif  // FTOP_FTOP_HPP_
