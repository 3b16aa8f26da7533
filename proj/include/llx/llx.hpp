#pragma once

#include "llx/error.hpp"
#include "llx/multiset.hpp"
#include "llx/formula.hpp"
#include "llx/rule.hpp"
#include "llx/problem.hpp"
#include "llx/llx_format.hpp"
#include "llx/engine.hpp"
#include "llx/oracle.hpp"
#include "llx/proof.hpp"
#include "llx/proof_build.hpp"
#include "llx/proof_json.hpp"
#include "llx/petri.hpp"
#include "llx/audit.hpp"
#include "llx/cfir.hpp"
#include "llx/clf.hpp"
