#ifndef PRYMSV_TESTS_UTIL_HPP
#define PRYMSV_TESTS_UTIL_HPP

#include <doctest.h>

#include <prymsv/error.hpp>
#include <prymsv/rational.hpp>

#include <gmpxx.h>

namespace testutil
{

inline prymsv::Rational q(long p, long d = 1)
{
    return prymsv::Rational(p, d);
}

inline prymsv::Rational from_mpq(const mpq_class &x)
{
    return prymsv::Rational(mpz_class(x.get_num()), mpz_class(x.get_den()));
}

/// Kind of the prymsv::Error thrown by fn; fails the test if nothing is thrown.
template <typename Fn>
prymsv::ErrorKind kind_of(Fn &&fn)
{
    try {
        fn();
    } catch (const prymsv::Error &e) {
        return e.kind();
    }
    FAIL("expected prymsv::Error");
    return prymsv::ErrorKind::InvalidArgument;
}

} // namespace testutil

#endif
