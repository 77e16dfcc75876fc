#pragma once

#include "vchc/rational.hpp"
#include "vchc/errors.hpp"
#include "vchc/instance.hpp"
#include "vchc/instance_json.hpp"
#include "vchc/assignment.hpp"
#include "vchc/maxflow.hpp"
#include "vchc/feasibility.hpp"
#include "vchc/primal_dual.hpp"
#include "vchc/cover.hpp"
#include "vchc/oracle.hpp"
#include "vchc/certify.hpp"
#include "vchc/gen.hpp"
#include "vchc/json_io.hpp"
