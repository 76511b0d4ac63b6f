#pragma once

#include "error.hpp"
#include "presentation.hpp"
#include "monoid_table.hpp"
#include "lattice.hpp"
#include "garside_structure.hpp"
#include "group.hpp"
#include "properties.hpp"
#include "families.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "span.hpp"
#include "coxeter.hpp"
