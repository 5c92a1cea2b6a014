#pragma once

#include "softtop/catalog.hpp"
#include "softtop/covers.hpp"
#include "softtop/search.hpp"
#include "softtop/separation.hpp"
#include "softtop/signature.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/space_io.hpp"
#include "softtop/topology.hpp"
#include "softtop/verdict.hpp"
#include "softtop/verify.hpp"
