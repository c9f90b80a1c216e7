"""Embedded fixture checks behind the selftest subcommand: a fast sweep of
known values through every module, printing one line per check."""

from fractions import Fraction

from .bigmod import crt_idempotent, egcd, is_prime, perfect_power_root, powmod
from .fpoly import berlekamp_complete, is_irreducible
from .numberfield import principal_ideal_census, quadratic_descriptor, validate_descriptor
from .oracle import cz_oracle
from .roots import all_roots_from_one, root_from_factor
from .smoothness import least_prime_bound, pollard_strassen_primes, smooth_part
from .splitter import factor_fixed


def run() -> int:
    passed = failed = 0

    def check(name, ok):
        nonlocal passed, failed
        if ok:
            passed += 1
            print(f"ok   {name}")
        else:
            failed += 1
            print(f"FAIL {name}")

    check("powmod fermat", powmod(3, 40, 41) == 1)
    check("egcd bezout", egcd(240, 46) == (2, -9, 47))
    check("crt idempotent", crt_idempotent(8, 5) == 25)
    check("mersenne prime", is_prime((1 << 61) - 1))
    check("perfect power", perfect_power_root(-32, 5) == -2)

    check("smooth part", smooth_part(40, 5) == (40, [(2, 3), (5, 1)]))
    check("pollard strassen", pollard_strassen_primes(8 * 7919, 8000) == [2, 7919])
    prof = least_prime_bound(41, Fraction(1, 2), Fraction(1, 20))
    check("least bound 41", (prof.q, prof.S) == (2, 8))

    check("berlekamp x^2+1 mod 5",
          berlekamp_complete([1, 0, 1], 5) == [([2, 1], 1), ([3, 1], 1)])
    check("irreducible x^2+1 mod 7", is_irreducible([1, 0, 1], 7))
    check("oracle x^2+1 mod 13",
          cz_oracle([1, 0, 1], 13, seed=1) == [([5, 1], 1), ([8, 1], 1)])

    qi = quadratic_descriptor(-1)
    check("descriptor Q(i)", all(ok for _, ok, _ in validate_descriptor(qi)))
    check("class number -23", quadratic_descriptor(-23).class_number == 3)
    check("census Q(i)", principal_ideal_census(qi, 2, 2) == (2, 2))

    res = factor_fixed([1, 0, 1], 13, qi)
    check("factor x^2+1 mod 13",
          [f for f, _ in res.factors] == [[5, 1], [8, 1]])
    d7 = quadratic_descriptor(7)
    res = factor_fixed([-7, 0, 1], 1048609, d7)
    check("factor x^2-7 splitter path",
          res.report["path"] == "splitter" and len(res.factors) == 2)

    check("cube root from factor", root_from_factor([4, 5, 1], 3, 6, 7) == 5)
    check("expand roots", all_roots_from_one(3, 3, 7, 6) == [3, 5, 6])

    print(f"{passed} passed, {failed} failed")
    return 0 if failed == 0 else 1
