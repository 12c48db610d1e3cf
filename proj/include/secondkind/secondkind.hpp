#pragma once

// Exact-arithmetic construction and verification of second (linearly
// independent) solutions to second-order linear homogeneous difference
// equations, including the degenerate confluent-hypergeometric case and the
// associated Laguerre functions of the second kind.

#include "secondkind/bezout.hpp"
#include "secondkind/chg.hpp"
#include "secondkind/laurent.hpp"
#include "secondkind/poly.hpp"
#include "secondkind/pqpoly.hpp"
#include "secondkind/rational.hpp"
#include "secondkind/recurrence.hpp"
#include "secondkind/series.hpp"
