#pragma once

// Umbrella header.

#include "sigbasis/buchberger.hpp"
#include "sigbasis/classic_reduce.hpp"
#include "sigbasis/field.hpp"
#include "sigbasis/generators.hpp"
#include "sigbasis/io.hpp"
#include "sigbasis/monomial.hpp"
#include "sigbasis/monomial_lookup.hpp"
#include "sigbasis/pair_queue.hpp"
#include "sigbasis/polynomial.hpp"
#include "sigbasis/reduced_basis.hpp"
#include "sigbasis/signature.hpp"
#include "sigbasis/signature_basis.hpp"
#include "sigbasis/stats.hpp"
#include "sigbasis/term_queue.hpp"
