#pragma once

#include "trv/catalog.hpp"
#include "trv/division.hpp"
#include "trv/error.hpp"
#include "trv/extension.hpp"
#include "trv/group.hpp"
#include "trv/json_io.hpp"
#include "trv/perm.hpp"
#include "trv/quasigroup.hpp"
#include "trv/random.hpp"
#include "trv/report.hpp"
#include "trv/sphere.hpp"
