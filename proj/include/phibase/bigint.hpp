#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace phibase {

/// Arbitrary-precision signed integer used for every coefficient and sequence value.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace phibase
