#pragma once

#include "hnflag/bundle.hpp"
#include "hnflag/config.hpp"
#include "hnflag/error.hpp"
#include "hnflag/fixtures.hpp"
#include "hnflag/flag_geometry.hpp"
#include "hnflag/rational.hpp"
#include "hnflag/render.hpp"
#include "hnflag/report.hpp"
#include "hnflag/seshadri.hpp"
