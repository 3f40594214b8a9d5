#pragma once

#include <wwords/errors.hpp>
#include <wwords/qseries/marker_poly.hpp>
#include <wwords/qseries/monomial.hpp>
#include <wwords/qseries/products.hpp>
#include <wwords/qseries/qpolynomial.hpp>
#include <wwords/qseries/series.hpp>
#include <wwords/qseries/substitute.hpp>
