#ifndef HBFIBER_HBFIBER_HPP
#define HBFIBER_HBFIBER_HPP

#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "ideal.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "module_gb.hpp"
#include "resolution.hpp"
#include "multiplicity.hpp"
#include "oracles.hpp"
#include "parser.hpp"

#endif
