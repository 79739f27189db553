#ifndef SINECERT_SINECERT_HPP
#define SINECERT_SINECERT_HPP

#include "certify.hpp"
#include "decompose.hpp"
#include "expr.hpp"
#include "grid.hpp"
#include "interval.hpp"
#include "lemmas.hpp"
#include "pipeline.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "serialize.hpp"
#include "sinepoly.hpp"

#endif // SINECERT_SINECERT_HPP
