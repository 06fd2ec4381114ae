#ifndef GOT_GOT_HPP
#define GOT_GOT_HPP

#include "got/algebra.hpp"
#include "got/bargmann.hpp"
#include "got/engine.hpp"
#include "got/format.hpp"
#include "got/identities.hpp"
#include "got/json_io.hpp"
#include "got/parse.hpp"
#include "got/polynomial.hpp"
#include "got/rational.hpp"
#include "got/series.hpp"
#include "got/special_poly.hpp"

#endif  // GOT_GOT_HPP
