#pragma once

#include "cellalg/algebra.hpp"
#include "cellalg/cell_datum.hpp"
#include "cellalg/dual_cell.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/field_spec.hpp"
#include "cellalg/generators.hpp"
#include "cellalg/matrix.hpp"
#include "cellalg/poset.hpp"
#include "cellalg/prime_field.hpp"
#include "cellalg/radical.hpp"
#include "cellalg/rational.hpp"
#include "cellalg/report.hpp"
#include "cellalg/selftest.hpp"
#include "cellalg/subspace.hpp"
#include "cellalg/trace.hpp"
#include "cellalg/workbench.hpp"
