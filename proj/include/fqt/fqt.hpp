#ifndef FQT_FQT_HPP
#define FQT_FQT_HPP

#include "congruence.hpp"
#include "degree.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "field.hpp"
#include "functable.hpp"
#include "hallwoodall.hpp"
#include "irreducible.hpp"
#include "json_io.hpp"
#include "lemmalab.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "relations.hpp"
#include "sunit.hpp"
#include "text.hpp"

#endif  // FQT_FQT_HPP
