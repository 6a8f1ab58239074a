#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sl3 {

/// Exact integer used for every coefficient and matrix entry.
using Integer = boost::multiprecision::cpp_int;

}  // namespace sl3
