#pragma once

#include "assoform/action.hpp"
#include "assoform/apolarity.hpp"
#include "assoform/duality.hpp"
#include "assoform/errors.hpp"
#include "assoform/invariants.hpp"
#include "assoform/matrix.hpp"
#include "assoform/milnor.hpp"
#include "assoform/monomial.hpp"
#include "assoform/poly.hpp"
#include "assoform/poly_tuple.hpp"
#include "assoform/random.hpp"
#include "assoform/rational.hpp"
#include "assoform/suites.hpp"
