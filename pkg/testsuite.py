# Copyright (c) 2024, The pdfamilies developers
# SPDX-License-Identifier: ISC

# This is the pdfamilies test suite. It runs selftests on small fields and
# groups where every answer is known, and then the sweep tests, which check
# the closed formulas, the constructions and the catalog against the oracle
# over all prime powers up to a bound. It should be run from the top-level
# directory with
#
#   $ python3 testsuite.py
#
# Some additional options can be turned on by passing them as arguments. They
# default to off.
#
#  - obsessive:
#    Widens the sweep bounds (closed forms up to q = 2000, structural checks
#    up to q = 500, 1000 random partitions). Increases the testing time by an
#    order of magnitude.
#
#  - pin:
#    Rewrites the pinned catalog row count in tests/catalog_121.count from the
#    current run instead of comparing against it. Only use this after
#    checking the new table.
#
# For example, this command runs the test suite in obsessive mode:
#
#   $ python3 testsuite.py obsessive
#
# All tests should pass.

import argparse
import os
import subprocess
import sys

import numpy as np

import classify
import construct
import verifysuite
from pdfamilies import make_field, make_group, prime_power_spec, \
                       prime_powers, field_arith, dlog, group_add, \
                       group_neg, \
                       SetFamily, CatalogRow, \
                       Catalog, NonExistence, \
                       delta_internal, delta_external, int_family, \
                       ext_family, classify_set, classify_family, \
                       classify_relative, classify_sedf, classify_pedf, \
                       make_cyclotomic_context, cyclotomic_matrix, \
                       cyclotomic_number_direct, transversal, \
                       external_transversal, diagonal, phi_profile, \
                       pairing_relations, minus_one_class, \
                       predicted_minus_one_class, quadratic_representations, \
                       closed_form_cyclo_numbers, uniformity, \
                       cyclotomic_decomposition, \
                       from_pds_collection, uniform_classes, uniform_unions, \
                       partition_prediction, squares_closed_form, \
                       subfield_family, c0e_pds_criterion, \
                       structural_checks, \
                       run_catalog, format_rows, reverify_rows, parse_rows, \
                       parse_family, parse_group, parse_index_sets, \
                       standard_field_bound, standard_verify_bound, \
                       PDFamilyError, NotPrimeError, NotPrimitiveError, \
                       DegreeZeroError, BoundExceededError, \
                       DivisionByZeroError, LogOfZeroError, EmptyOrdersError, \
                       NotDisjointError, ZeroInSetError, UnequalSizesError, \
                       ZeroInTError, BadDivisorError, IndexOutOfRangeError, \
                       BadEpsilonError, NoRepresentationError, \
                       UnsupportedEError, NotUniformError, BadIndexSetError, \
                       OverlappingIndexSetsError, ParameterMismatchError, \
                       NotPDSError, NotASubfieldIndexError, ParseError


TOP = os.path.dirname(os.path.abspath(__file__))
PINNED_COUNT = os.path.join(TOP, "tests", "catalog_121.count")


all_passed = True


def fail(msg=None):
    global all_passed
    all_passed = False
    if msg is not None:
        print("fail: " + msg)


def verify(cond, msg):
    if not cond:
        fail(msg)


def verify_equal(x, y):
    if x != y:
        fail("'{}' does not equal '{}'".format(x, y))


def verify_raises(exc_type, fn, *args, **kwargs):
    # Verifies that fn(*args, **kwargs) raises 'exc_type'

    try:
        fn(*args, **kwargs)
    except exc_type:
        pass
    except Exception as e:
        fail("{}{} raised {} ({}) instead of {}".format(
            fn.__name__, args, type(e).__name__, e, exc_type.__name__))
    else:
        fail("{}{} did not raise {}".format(fn.__name__, args,
                                            exc_type.__name__))


# Keep the bounds independent of the environment the tests run in
os.environ.pop("PDF_FIELD_BOUND", None)
os.environ.pop("PDF_VERIFY_BOUND", None)

obsessive = False
pin = False


def run_tests():
    global obsessive, pin
    for s in sys.argv[1:]:
        if s == "obsessive":
            obsessive = True
            print("Obsessive mode enabled")
        elif s == "pin":
            pin = True
            print("Pin mode enabled")
        else:
            print("Unrecognized option '{}'".format(s))
            return

    run_selftests()
    run_sweep_tests()

    if all_passed:
        print("All selftests and sweep tests passed")
    else:
        sys.exit("Some tests failed")


def run_selftests():
    #
    # Common helper functions
    #

    def verify_str(obj, s):
        verify_equal(str(obj), s)

    def verify_same_elements(xs, ys, what):
        verify(sorted(int(x) for x in xs) == sorted(int(y) for y in ys),
               "{}: {} and {} differ as sets".format(what, list(xs),
                                                     list(ys)))

    gf9 = make_field(3, 2)
    gf13 = make_field(13, 1)
    z33 = make_group((3, 3))

    print("Testing prime_power_spec() and prime_powers()")

    spec = prime_power_spec(49)
    verify_equal((spec.p, spec.n, spec.q), (7, 2, 49))
    verify_equal(prime_power_spec(8).p, 2)
    for bad in 0, 1, 12, 100:
        verify_raises(NotPrimeError, prime_power_spec, bad)
    verify_equal(prime_powers(16), [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
    verify_equal(len(prime_powers(121)), 41)

    print("Testing make_field()")

    verify_equal(gf9.modulus, (1, 0, 1))
    verify_equal(gf9.modulus_str, "x^2 + 1")
    verify_equal(gf9.alpha, 4)
    verify_equal(gf9.element_str(gf9.alpha), "x + 1")
    verify_equal(gf9.element_str(0), "0")
    verify_equal(gf13.alpha, 2)
    verify_equal(make_field(2, 4).modulus, (1, 0, 0, 1, 1))
    verify_equal(make_field(2, 1).exp_table.tolist(), [1])

    verify_raises(NotPrimeError, make_field, 4, 1)
    verify_raises(DegreeZeroError, make_field, 3, 0)
    verify_raises(BoundExceededError, make_field, 2, 21)
    verify_raises(BoundExceededError, make_field, 11, 2, bound=100)
    verify_raises(NotPrimitiveError, make_field, 13, 1, alpha=3)
    verify_equal(make_field(13, 1, alpha=6).alpha, 6)

    print("Testing field arithmetic")

    for field in gf9, gf13, make_field(2, 4):
        q = field.q
        for x in range(q):
            verify_equal(field.add(x, field.neg(x)), 0)
            verify_equal(field.sub(field.add(x, 5 % q), 5 % q), x)
            if x:
                verify_equal(field.mul(x, field.inv(x)), 1)
                verify_equal(field.exp_table[field.dlog(x)], x)
                verify_equal(field.pow(x, q - 1), 1)
                verify_equal(field.pow(x, -1), field.inv(x))
        xs = field.elements()
        verify_equal(field.mul_arrays(xs, 1).tolist(), xs.tolist())
        verify_equal(field.mul_scalar(0, xs).tolist(), [0]*q)

    verify_equal(field_arith(gf13, "mul", 3, 5), 2)
    verify_equal(field_arith(gf13, "pow", 2, 12), 1)
    verify_equal(field_arith(gf13, "dlog", 2), 1)
    verify_equal(field_arith(gf13, "sub", 3, 5), 11)
    verify_equal(dlog(gf9, gf9.alpha), 1)
    verify_raises(PDFamilyError, field_arith, gf13, "div", 3, 5)
    verify_raises(PDFamilyError, field_arith, gf13, "add", 3)
    verify_raises(PDFamilyError, gf13.add, 13, 1)

    # Field axioms on 10^4 random triples per field
    rng = np.random.default_rng(2024)
    for p, n in (2, 8), (3, 5), (5, 4), (7, 2), (101, 1), (2, 1):
        field = make_field(p, n)
        x, y, z = rng.integers(field.q, size=(3, 10**4))
        add, mul = field.add_arrays, field.mul_arrays
        what = "GF({})".format(field.q)

        verify(np.array_equal(add(add(x, y), z), add(x, add(y, z))),
               what + ": addition is not associative")
        verify(np.array_equal(mul(mul(x, y), z), mul(x, mul(y, z))),
               what + ": multiplication is not associative")
        verify(np.array_equal(add(x, y), add(y, x)) and
               np.array_equal(mul(x, y), mul(y, x)),
               what + ": not commutative")
        verify(np.array_equal(mul(x, add(y, z)), add(mul(x, y), mul(x, z))),
               what + ": not distributive")
        verify(np.array_equal(add(x, field.neg_array(x)), np.zeros_like(x)),
               what + ": x + (-x) != 0")
        verify(np.array_equal(mul(x, 1), x), what + ": 1*x != x")

    # Building the same field twice gives the same tables
    for p, n in (2, 10), (3, 6), (7, 3), (13, 1):
        a = make_field(p, n)
        b = make_field(p, n)
        verify_equal((a.modulus, a.alpha), (b.modulus, b.alpha))
        verify(np.array_equal(a.exp_table, b.exp_table) and
               np.array_equal(a.log_table, b.log_table) and
               a.exp_table.dtype == b.exp_table.dtype,
               "GF({}^{}) tables differ between builds".format(p, n))

    verify_raises(DivisionByZeroError, gf13.inv, 0)
    verify_raises(ZeroDivisionError, gf13.inv, 0)
    verify_raises(DivisionByZeroError, gf13.pow, 0, -1)
    verify_equal(gf13.pow(0, 0), 1)
    verify_raises(LogOfZeroError, gf13.dlog, 0)

    print("Testing subfields")

    gf16 = make_field(2, 4)
    sub = gf16.subfield(2)
    verify_equal(len(sub), 4)
    verify_equal(sub[:2].tolist(), [0, 1])
    for x in sub:
        for y in sub:
            verify(int(gf16.add(int(x), int(y))) in sub.tolist(),
                   "GF(4) inside GF(16) is not closed under addition")
    verify_equal(gf16.subfield(4).tolist(), list(range(16)))
    verify_raises(NotASubfieldIndexError, gf16.subfield, 3)

    print("Testing the bound environment variables")

    verify_equal(standard_field_bound(), 2**20)
    verify_equal(standard_verify_bound(), 10**4)
    os.environ["PDF_FIELD_BOUND"] = "100"
    verify_equal(standard_field_bound(), 100)
    verify_raises(BoundExceededError, make_field, 11, 2)
    os.environ["PDF_FIELD_BOUND"] = "lots"
    verify_raises(PDFamilyError, standard_field_bound)
    os.environ.pop("PDF_FIELD_BOUND")

    os.environ["PDF_VERIFY_BOUND"] = "10"
    verify(not uniform_classes(25, 6, u=2).verified,
           "GF(25) verified with a verification bound of 10")
    os.environ.pop("PDF_VERIFY_BOUND")

    print("Testing abelian groups")

    verify_equal(str(z33), "Z_3 x Z_3")
    verify_equal(z33.encode((1, 2)), 7)
    verify_equal(z33.decode(7), (1, 2))
    verify_equal(group_add(z33, (1, 2), (2, 2)), (0, 1))
    verify_equal(group_neg(z33, (1, 2)), (2, 1))
    verify_equal(make_group((4, 2)).n, 8)
    verify_raises(EmptyOrdersError, make_group, ())
    verify_raises(PDFamilyError, make_group, (3, 1))
    verify_raises(PDFamilyError, z33.encode, (3, 0))
    verify_raises(PDFamilyError, z33.encode, (1,))

    print("Testing difference multisets")

    d = delta_internal(gf13, [1, 3, 9])
    verify_equal(d.as_dict(), {2: 1, 5: 1, 6: 1, 7: 1, 8: 1, 11: 1})
    verify_equal(d.total, 6)
    verify_equal(d[0], 0)
    verify_equal(delta_internal(gf13, [4]).total, 0)
    verify_equal(delta_external(gf13, [1], [3]).as_dict(), {11: 1})
    verify_raises(NotDisjointError, delta_external, gf13, [1, 3], [3, 9])

    fam = SetFamily(gf13, [[1, 3, 9], [4, 10, 12]])
    verify_equal(int_family(fam) + ext_family(fam),
                 delta_internal(gf13, fam.union))
    verify_equal(int_family(fam).total, 12)
    verify_equal(ext_family(fam).total, 18)

    verify_raises(NotDisjointError, SetFamily, gf13, [[1, 3], [3, 4]])
    verify_raises(PDFamilyError, SetFamily, gf13, [[1, 13]])
    verify_equal(SetFamily(z33, [[(1, 0), (2, 0)]]).sets[0].tolist(), [1, 2])

    print("Testing classify_set()")

    squares13 = gf13.exp_table[::2]
    verify_str(classify_set(gf13, squares13), "(13,6,2,3)-PDS")
    verify_equal(classify_set(gf13, squares13).proper, True)

    ds = classify_set(make_field(7, 1), [1, 2, 4])
    verify_str(ds, "(7,3,1)-DS")
    verify_equal(ds.labels, ("DS", "PDS"))
    verify_equal(ds.proper, None)
    verify_equal(ds.mu, 1)

    verify_str(classify_set(gf13, [1, 3, 9]), "none")
    verify_equal(classify_set(gf13, [1, 3, 9]).labels, ())
    verify_str(classify_set(gf13, [5]), "(13,1,0)-DS")
    verify_raises(PDFamilyError, classify_set, gf13, [])

    # A punctured subgroup H \ {0} is an (n, k, k-1, 0)-PDS
    verify_str(classify_set(gf9, gf9.subfield(1)[1:]), "(9,2,1,0)-PDS")
    verify_str(classify_set(z33, [1, 2]), "(9,2,1,0)-PDS")
    verify_str(classify_set(gf16, gf16.subfield(2)[1:]), "(16,3,2,0)-PDS")

    # ...and an (n, k, lam, 0)-PDS with lam != 0 is one
    for q in 9, 16, 25, 27, 49:
        spec = prime_power_spec(q)
        field = make_field(spec.p, spec.n)
        for e in range(2, q):
            if (q - 1) % e:
                continue
            c0 = make_cyclotomic_context(field, e).cyclotomic_class(0)
            res = classify_set(field, c0)
            if res.kind == "PDS" and res.mu == 0 and res.lam:
                with_zero = np.concatenate(([0], c0))
                sums = field.add_arrays(with_zero[:, None],
                                        with_zero[None, :])
                verify(np.isin(sums, with_zero).all(),
                       "C_0^{} + {{0}} in GF({}) is a {} but not a subgroup"
                       .format(e, q, res))

    # A PDS that is not a DS has D = -D. A DS need not.
    gf25 = make_field(5, 2)
    gf49 = make_field(7, 2)
    for field, D, s in (
            (gf49, gf49.exp_table[::4], "(49,12,5,2)-PDS"),
            (gf25, gf25.exp_table[np.arange(24) % 6 < 2], "(25,8,3,2)-PDS"),
            (gf13, squares13, "(13,6,2,3)-PDS")):
        verify_str(classify_set(field, D), s)
        verify_same_elements(field.neg_array(D), D, s + " negated")
    verify(not np.array_equal(np.sort(make_field(7, 1).neg_array([1, 2, 4])),
                              [1, 2, 4]),
           "(7,3,1)-DS is symmetric")

    print("Testing classify_family()")

    verify_str(classify_family(fam, "internal"), "(13,2,3,0,2)-DPDF")
    verify_str(classify_family(fam, "external"), "(13,2,3,2,1)-EPDF")
    verify_equal(classify_family(fam, "internal").labels, ("DPDF",))
    verify_equal(classify_family(fam, "external").params,
                 (13, 2, 3, 2, 1))

    subgroups = parse_family("1:0,2:0; 0:1,0:2; 1:1,2:2; 1:2,2:1", z33)
    verify_str(classify_family(subgroups, "internal"), "(9,4,2,1)-DDF")
    ext = classify_family(subgroups, "external")
    verify_str(ext, "(9,4,2,6)-EDF")
    verify_equal(ext.labels, ("EDF", "EPDF"))
    verify_str(ext.sedf, "none")
    verify_str(ext.pedf, "(9,4,(4),(2),(6))-PEDF")

    single = SetFamily(gf13, [[5]])
    verify_str(classify_family(single, "internal"), "(13,1,1,0)-DDF")
    verify_str(classify_family(single, "external"), "(13,1,1,0)-EDF")

    verify_str(classify_family(SetFamily(gf13, [[1, 2], [3, 5]]),
                               "internal"),
               "none")

    verify_raises(ZeroInSetError, classify_family,
                  SetFamily(gf13, [[0, 1], [2, 3]]), "internal")
    verify_raises(UnequalSizesError, classify_family,
                  SetFamily(gf13, [[1], [3, 9]]), "external")
    verify_raises(PDFamilyError, classify_family, fam, "both")
    verify_raises(PDFamilyError, classify_family, SetFamily(gf13, []),
                  "internal")

    print("Testing classify_relative()")

    verify_equal(classify_relative(fam, fam.union, "internal"),
                 classify_family(fam, "internal"))
    verify_equal(classify_relative(fam, fam.union, "internal").relative,
                 False)
    off = np.setdiff1d(np.arange(1, 13), fam.union)
    verify_str(classify_relative(fam, off, "internal"),
               "(13,2,3,2,0)-DPDF (relative)")
    verify_equal(classify_relative(fam, np.arange(1, 13), "internal").kind,
                 None)
    uneven = SetFamily(gf13, [[1], [3, 9]])
    verify_equal(classify_relative(uneven, uneven.union, "internal").k,
                 (1, 2))
    verify_raises(ZeroInTError, classify_relative, fam, [0, 1], "internal")

    print("Testing classify_sedf() and classify_pedf()")

    z5 = make_group((5,))
    verify_str(classify_sedf(SetFamily(z5, [[0, 1], [2, 4]])),
               "(5,2,2,1)-SEDF")
    verify_str(classify_sedf(SetFamily(z5, [[0, 1], [2, 3]])), "none")

    # Partitions of G: {0} and G*
    parts = SetFamily(z5, [[0], [1, 2, 3, 4]])
    verify_str(classify_pedf(parts), "(5,2,(1;1),(1;4),(1;1))-PEDF")
    verify_str(classify_sedf(parts), "(5,2,(1;4),1)-SEDF")
    verify_equal(classify_pedf(parts).c, (1, 1))

    # All e classes of order e cover G*, so Int and Ext are constant there
    for q, e in (13, 4), (13, 6), (16, 5), (25, 3):
        spec = prime_power_spec(q)
        field = make_field(spec.p, spec.n)
        cctx = make_cyclotomic_context(field, e)
        classes = SetFamily(field, [cctx.cyclotomic_class(i)
                                    for i in range(e)])
        res = classify_pedf(classes)
        verify_equal(res.kind, "PEDF")
        verify_equal(res.lam, ((e - 1)*cctx.f,))
        verify_equal(classify_family(classes, "external").kind, "EDF")

    def size_class(fam, k):
        # Int of the sets of size k in 'fam', and the mask of their union

        sets = [D for D in fam.sets if len(D) == k]
        inside = np.zeros(fam.group.order, dtype=bool)
        inside[np.concatenate(sets)] = True
        return int_family(SetFamily(fam.group, sets)).counts, inside

    def verify_pedf_partition(fam, of_g_star, expected):
        # A partition of G is a PEDF iff every size class is a
        # (c*k - lam)-DDF. A partition of G* is one iff every size class is
        # a (c*k - lam - 1, c*k - lam)-DPDF.

        pedf = classify_pedf(fam)
        verify_equal(pedf.kind, "PEDF" if expected else None)

        consistent = True
        for k in sorted(set(fam.sizes)):
            counts, inside = size_class(fam, k)
            star, ins = counts[1:], inside[1:]
            vals_in = set(star[ins].tolist()) if of_g_star else \
                      set(star.tolist())
            vals_out = set(star[~ins].tolist()) if of_g_star else set()
            if len(vals_in) != 1 or len(vals_out) > 1 or \
               vals_out and vals_out != {min(vals_in) + 1}:
                consistent = False
            elif pedf.kind:
                h = pedf.k.index(k)
                c, lam = pedf.c[h], pedf.lam[h]
                verify_equal(vals_in, {c*k - lam - 1 if of_g_star else
                                       c*k - lam})
        verify_equal(consistent, expected)
        return pedf

    # Partitions of G
    z7 = make_group((7,))
    pedf = verify_pedf_partition(SetFamily(z7, [[0], [1, 2, 4], [3, 5, 6]]),
                                 False, True)
    verify_equal((pedf.c, pedf.k, pedf.lam), ((1, 2), (1, 3), (1, 4)))
    pedf = verify_pedf_partition(
        parse_family("0:0; 1:0,2:0; 0:1,0:2; 1:1,2:2; 1:2,2:1", z33),
        False, True)
    verify_equal((pedf.c, pedf.k, pedf.lam), ((1, 4), (1, 2), (1, 7)))
    verify_pedf_partition(parts, False, True)
    verify_pedf_partition(SetFamily(z5, [[0, 1], [2, 3, 4]]), False, False)

    # Partitions of G*. The squares of GF(13) form a (13,6,2,3)-PDS, and the
    # odd classes of order 6 a (0,1)-DPDF on the non-squares.
    cctx6 = make_cyclotomic_context(gf13, 6)
    pedf = verify_pedf_partition(
        SetFamily(gf13, [gf13.exp_table[::2]] +
                        [cctx6.cyclotomic_class(i) for i in (1, 3, 5)]),
        True, True)
    verify_equal((pedf.c, pedf.k, pedf.lam), ((3, 1), (2, 6), (5, 3)))
    verify_pedf_partition(SetFamily(z7, [[1, 2, 4], [3, 5, 6]]), True, True)
    # The squares split is a (0,2)-DPDF, not a (lam, lam + 1) one
    verify_pedf_partition(
        SetFamily(gf13, [[1, 3, 9], [4, 10, 12], [2, 5, 6, 7, 8, 11]]),
        True, False)

    print("Testing parsing")

    verify_equal(parse_group("2x2x4").orders, (2, 2, 4))
    verify_raises(ParseError, parse_group, "3*3")
    verify_equal(parse_index_sets("0,1;2,3"), [(0, 1), (2, 3)])
    verify_raises(ParseError, parse_index_sets, "0,1;;")
    verify_raises(ParseError, parse_family, "1,3,9;", gf13)
    verify_raises(ParseError, parse_family, "1,three", gf13)
    verify_raises(ParseError, parse_family, "1:2", gf13)
    verify_raises(NotDisjointError, parse_family, "1,3; 3,9", gf13)
    verify_equal(parse_family(" 1, 3 ,9 ;4,10,12 ", gf13).sizes, (3, 3))

    print("Testing cyclotomic classes and numbers")

    cctx = make_cyclotomic_context(gf13, 4)
    verify_equal(cctx.f, 3)
    verify_equal(cctx.cyclotomic_class(0).tolist(), [1, 3, 9])
    verify_equal(cctx.cyclotomic_class(2).tolist(), [4, 12, 10])
    verify_equal(cctx.class_index(3), 0)
    verify_equal(cctx.class_indices([1, 2, 4]).tolist(), [0, 1, 2])
    verify_raises(LogOfZeroError, cctx.class_indices, [0, 1])
    verify_equal(cctx.rho(2), 6)
    verify_raises(BadEpsilonError, cctx.rho, 3)

    verify_raises(BadDivisorError, make_cyclotomic_context, gf13, 5)
    verify_raises(BadDivisorError, make_cyclotomic_context, gf13, 1)
    verify_equal(make_cyclotomic_context(gf13, 12).f, 1)

    for q in 13, 16, 25, 27, 31:
        spec = prime_power_spec(q)
        field = make_field(spec.p, spec.n)
        for e in range(2, q):
            if (q - 1) % e:
                continue
            matrix = cyclotomic_matrix(make_cyclotomic_context(field, e))
            verify_equal(int(matrix.sum()), q - 2)
            verify_equal(matrix.flags.writeable, False)

    verify_equal(cyclotomic_number_direct(cctx, 0, 0), 0)
    verify_raises(IndexOutOfRangeError, cyclotomic_number_direct, cctx, 4,
                  0)

    print("Testing transversals and diagonals")

    t1 = transversal(cctx, 1)
    verify_equal(t1.multiplier, 2)
    verify_equal(t1.class_index, 1)
    verify_same_elements(t1.elements, [2, 5, 6], "T_1")
    verify_same_elements(transversal(cctx, 2).elements,
                         gf13.neg_array(t1.elements), "T_2 = -T_1")
    verify_raises(IndexOutOfRangeError, transversal, cctx, 3)
    verify_raises(IndexOutOfRangeError, transversal, cctx, 0)

    for j in 1, 2, 3:
        ts = [external_transversal(cctx, r, j).elements for r in (1, 2, 3)]
        counts = np.bincount(np.concatenate(ts), minlength=13)
        verify_equal(
            counts.tolist(),
            delta_external(gf13, cctx.cyclotomic_class(j),
                           cctx.cyclotomic_class(0)).counts.tolist())
    verify_raises(IndexOutOfRangeError, external_transversal, cctx, 1, 0)
    verify_raises(IndexOutOfRangeError, external_transversal, cctx, 4, 1)

    d1 = diagonal(cctx, 2, 1)
    verify_equal(d1.class_index, 1)
    verify_same_elements(d1.elements, gf13.exp_table[1::2], "D_1")
    verify_same_elements(diagonal(cctx, 4, 1).elements, t1.elements,
                         "D_1 for epsilon = e")
    verify_raises(BadEpsilonError, diagonal, cctx, 3, 1)

    print("Testing phi profiles and pairing relations")

    profile = phi_profile(make_cyclotomic_context(gf13, 6), 2)
    verify_equal(profile.phi, (0, 1))
    verify_equal(profile.psi, (0, 0))
    verify_equal(profile.central_class, 1)
    verify_equal(profile.kappa, 1)
    verify_same_elements(profile.phi_sets[1], [12], "Phi_1")
    verify_equal([(lhs, rhs) for _, lhs, rhs in
                  pairing_relations(profile, 13)],
                 [(0, 0), (1, 1)])
    verify_raises(BadEpsilonError, phi_profile, cctx, 3)
    verify_raises(BadEpsilonError, phi_profile, cctx, 1)

    profile = phi_profile(cctx, 2)
    verify_equal(sum(profile.phi), 2)
    verify_equal(profile.central_class, None)

    verify_equal(minus_one_class(cctx, 4), 2)
    verify_equal(predicted_minus_one_class(13, 4), 2)
    verify_equal(minus_one_class(cctx, 2), 0)
    verify_equal(predicted_minus_one_class(13, 2), 0)
    verify_equal(predicted_minus_one_class(7, 2), 1)

    print("Testing cyclotomic_decomposition()")

    verify_equal(cyclotomic_decomposition(gf13, [1, 3, 9]), (4, (0,)))
    verify_equal(cyclotomic_decomposition(gf13, [4, 10, 12]), (4, (2,)))
    verify_equal(cyclotomic_decomposition(gf13, squares13), (2, (0,)))
    verify_equal(cyclotomic_decomposition(gf13, [0, 1, 12]), (6, (0,)))
    verify_equal(cyclotomic_decomposition(gf13, [1, 2]), (12, (0, 1)))
    verify_equal(cyclotomic_decomposition(gf13, [0]), None)

    print("Testing quadratic representations")

    rep = quadratic_representations(prime_power_spec(13), "e4")
    verify_equal(rep.values, {"s": -3, "t": 2})
    verify_equal(rep.ambiguous, ("t",))
    verify_equal(sorted(v["t"] for v in rep.variants()), [-2, 2])

    verify_equal(quadratic_representations(prime_power_spec(7), "e3").values,
                 {"c": 1, "d": 1})
    verify_equal(quadratic_representations(prime_power_spec(41), "e8").values,
                 {"x": 5, "y": 2, "a": -3, "b": 4})
    verify_equal(quadratic_representations(prime_power_spec(49), "e4").values,
                 {"s": -7, "t": 0})
    verify_equal(quadratic_representations(prime_power_spec(49), "e4")
                 .ambiguous, ())
    verify_equal(quadratic_representations(prime_power_spec(64), "e3").values,
                 {"c": 16, "d": 0})
    verify_equal(quadratic_representations(prime_power_spec(37), "e6").values,
                 {"s": -5, "t": 2})

    verify_equal(rep.sign_resolved, {"t": False})
    verify_equal(quadratic_representations(prime_power_spec(49), "e4")
                 .sign_resolved, {"t": True})
    verify_equal(quadratic_representations(prime_power_spec(41), "e8")
                 .sign_resolved, {"y": False, "b": False})
    table = closed_form_cyclo_numbers(prime_power_spec(13), 4)
    verify_equal(table.resolved.sign_resolved, {"t": True})
    verify_equal(table.resolved.values, table.representation)
    verify_equal(table.resolved.ambiguous, ())
    verify_equal(list(table.resolved.variants()), [table.representation])

    verify_raises(NoRepresentationError, quadratic_representations,
                  prime_power_spec(7), "e4")
    verify_raises(PDFamilyError, quadratic_representations,
                  prime_power_spec(13), "e5")

    print("Testing closed-form cyclotomic numbers")

    table = closed_form_cyclo_numbers(prime_power_spec(13), 4, gf13)
    verify_equal(list(table.values),
                 cyclotomic_matrix(cctx)[:, 0].tolist())
    verify_equal(table.case, "f odd")
    verify_equal(table.resolved_by[0], 1)

    table = closed_form_cyclo_numbers(prime_power_spec(7), 3)
    gf7 = make_field(7, 1)
    verify_equal([list(row) for row in table.matrix],
                 cyclotomic_matrix(make_cyclotomic_context(gf7, 3)).tolist())

    table = closed_form_cyclo_numbers(prime_power_spec(41), 8)
    verify_equal(len(table.values), 8)
    verify_equal(sum(table.values), (41 - 1)//8 - 1)

    verify_raises(UnsupportedEError, closed_form_cyclo_numbers,
                  prime_power_spec(7), 6)
    verify_raises(UnsupportedEError, closed_form_cyclo_numbers,
                  prime_power_spec(11), 5)
    verify_raises(NoRepresentationError, closed_form_cyclo_numbers,
                  prime_power_spec(7), 4)

    print("Testing uniformity()")

    params = uniformity(prime_power_spec(16), 5)
    verify_equal((params.q, params.beta, params.eta), (4, 1, -1))
    verify_equal(params.table, (2, 0, 1))
    verify_equal(params.verified, True)
    verify_equal((params.number(0, 0), params.number(0, 3),
                  params.number(2, 2), params.number(1, 2)), (2, 0, 0, 1))

    params = uniformity(prime_power_spec(4), 3)
    verify_equal(params.eta, -1)
    verify_equal(uniformity(prime_power_spec(13), 3), None)
    verify_raises(BadDivisorError, uniformity, prime_power_spec(13), 2)
    verify_raises(BadDivisorError, uniformity, prime_power_spec(13), 5)

    print("Testing from_pds_collection()")

    cctx9 = make_cyclotomic_context(gf9, 4)
    res = from_pds_collection(gf9, [cctx9.cyclotomic_class(0),
                                    cctx9.cyclotomic_class(1)])
    verify_str(res.predicted["members"], "(9,2,1,0)-PDS")
    verify_str(res.predicted["internal"], "(9,2,2,1,0)-DPDF")
    verify_str(res.predicted["union"], "(9,4,1,2)-PDS")
    verify_str(res.predicted["external"], "(9,2,2,0,2)-EPDF")
    verify_equal(res.verified, True)
    verify(res.notes["complement"] in ("G\\S is a DS", "G\\S is a proper PDS",
                                       "G*\\S is a proper PDS",
                                       "S classified directly"),
           "unexpected complement note " + res.notes["complement"])

    res = from_pds_collection(gf9, [cctx9.cyclotomic_class(i)
                                    for i in range(4)])
    verify_str(res.predicted["internal"], "(9,4,2,1)-DDF")
    verify_str(res.predicted["external"], "(9,4,2,6)-EDF")

    verify_raises(NotPDSError, from_pds_collection, gf13,
                  [[1, 3, 9], [4, 10, 12]])
    verify_raises(ParameterMismatchError, from_pds_collection, gf9,
                  [cctx9.cyclotomic_class(0), gf9.exp_table[1::2]])
    verify_raises(ZeroInSetError, from_pds_collection, gf9, [[0, 1, 2]])

    print("Testing uniform_classes() and uniform_unions()")

    for u, (internal, external) in verifysuite.GF25_UNIFORM:
        res = uniform_classes(25, 6, u=u)
        verify_str(res.predicted["members"], "(25,4,3,0)-PDS")
        verify_str(res.predicted["internal"], internal)
        verify_str(res.predicted["external"], external)
        verify_equal(res.verified, True)
        verify_equal(res.notes["indices"], tuple(range(u)))

    res = uniform_classes(25, 6, indices=(1, 3, 5))
    verify_str(res.predicted["internal"], "(25,3,4,3,0)-DPDF")
    verify_equal(res.verified, True)

    for e, u, union in verifysuite.HADAMARD_UNIONS:
        res = uniform_classes(16, e, u=u)
        verify_str(res.predicted["union"], union)
        verify_equal(res.notes["union_ds"], True)

    verify_raises(NotUniformError, uniform_classes, 13, 3, u=2)
    verify_raises(BadIndexSetError, uniform_classes, 25, 6, u=6)
    verify_raises(BadIndexSetError, uniform_classes, 25, 6, indices=(0, 0))
    verify_raises(BadIndexSetError, uniform_classes, 25, 6, indices=(0, 6))
    verify_raises(BadIndexSetError, uniform_classes, 25, 6)

    res = uniform_unions(25, 6, [(0, 1), (2, 3)])
    verify_str(res.predicted["members"], "(25,8,3,2)-PDS")
    verify_str(res.predicted["internal"], "(25,2,8,5,4)-DPDF")
    verify_str(res.predicted["external"], "(25,2,8,4,8)-EPDF")
    verify_equal(res.notes["ddf"], False)
    verify_equal(res.notes["edf_impossible"], True)
    verify_equal(res.verified, True)

    res = uniform_unions(25, 6, [(0, 1, 2), (3, 4, 5)])
    verify_equal(res.predicted["internal"].kind, "DDF")
    verify_equal(res.predicted["external"].kind, "EDF")
    verify_equal(res.notes["edf_impossible"], False)

    verify_equal("external" in uniform_unions(25, 6, [(0, 1)]).predicted,
                 False)
    verify_raises(OverlappingIndexSetsError, uniform_unions, 25, 6,
                  [(0, 1), (1, 2)])
    verify_raises(BadIndexSetError, uniform_unions, 25, 6, [(0, 1), (2,)])
    verify_raises(BadIndexSetError, uniform_unions, 25, 6, [(0, 6)])
    verify_raises(BadIndexSetError, uniform_unions, 25, 6, [])

    print("Testing partition_prediction()")

    for e, expected in verifysuite.GF49_PARTITIONS:
        pred, res = partition_prediction(gf49, e, 4)
        verify_equal(res.verified, True)
        verify_equal(pred.verified, True)
        verify_str(pred.base, "(49,12,5,2)-PDS")
        if expected is None:
            verify_equal(pred.case, "not-a-DPDF")
            verify_equal(pred.internal.kind, None)
        else:
            verify_str(pred.internal, expected[0])
            verify_str(pred.external, expected[1])
            verify_equal(pred.case, "proper-both")

    pred, _ = partition_prediction(13, 6, 2)
    verify_equal(pred.case, "EDF+DPDF")
    verify_equal(pred.theorem_id, "partition-pds")
    verify_equal(pred.proper_guaranteed, False)

    pred, _ = partition_prediction(37, 4, 2)
    verify_equal(pred.case, "DDF+EPDF")
    verify_equal(pred.proper_guaranteed, False)

    pred, _ = partition_prediction(19, 6, 2)
    verify_equal(pred.case, "DDF+EDF")
    verify_equal(pred.theorem_id, "partition-ds")
    verify_str(pred.internal, "(19,3,3,1)-DDF")
    verify_str(pred.external, "(19,3,3,3)-EDF")
    verify_equal(pred.proper_guaranteed, True)

    # Labels do not depend on the primitive element
    verify_equal(partition_prediction(make_field(13, 1, alpha=6), 6, 2)[0]
                 .internal, partition_prediction(13, 6, 2)[0].internal)

    verify_equal(partition_prediction(13, 12, 4), None)
    verify_raises(BadEpsilonError, partition_prediction, 13, 4, 4)
    verify_raises(BadEpsilonError, partition_prediction, 13, 6, 4)
    verify_raises(BadDivisorError, partition_prediction, 13, 10, 2)

    print("Testing squares_closed_form()")

    for q, e, internal, external in (
            (13, 6, "(13,3,2,0,1)-DPDF", "(13,3,2,2)-EDF"),
            (9, 4, "(9,2,2,1,0)-DPDF", "(9,2,2,0,2)-EPDF"),
            (17, 4, "(17,2,4,1,2)-DPDF", "(17,2,4,2)-EDF"),
            (37, 4, "(37,2,9,4)-DDF", "(37,2,9,4,5)-EPDF"),
            (41, 8, "(41,4,5,2)-DDF", "(41,4,5,7,8)-EPDF"),
            (19, 6, "(19,3,3,1)-DDF", "(19,3,3,3)-EDF")):
        pred = squares_closed_form(q, e)
        verify_str(pred.internal, internal)
        verify_str(pred.external, external)
        verify_equal(pred.verified, True)
        verify_equal(pred.profile, None)

    # Every admissible case up to 500, against the phi profile
    for q in prime_powers(500):
        if q % 2 == 0:
            continue
        for e in 4, 6, 8, (q - 1)//2:
            if e < 4 or (q - 1) % e or e % 2:
                continue
            # Raises VerificationError on a mismatch
            verify_equal(squares_closed_form(q, e).verified, True)

    verify_raises(UnsupportedEError, squares_closed_form, 41, 10)
    verify_raises(UnsupportedEError, squares_closed_form, 16, 5)
    verify_raises(BadDivisorError, squares_closed_form, 13, 3)

    print("Testing subfield_family()")

    res = subfield_family(64, 3, 3)
    verify_str(res.predicted["members"], "(64,7,6,0)-PDS")
    verify_str(res.predicted["internal"], "(64,3,7,6,0)-DPDF")
    verify_equal("external" in res.predicted, False)
    verify_equal(res.notes["e"], 9)
    verify_equal(res.verified, True)

    res = subfield_family(64, 3, 8)
    verify_str(res.predicted["external"], "(64,8,7,42,56)-EPDF")
    verify_equal(res.verified, True)

    res = subfield_family(81, 2, 2, indices=(3, 7))
    verify_str(res.predicted["internal"], "(81,2,8,7,0)-DPDF")
    verify_equal(res.verified, True)

    verify_raises(NotASubfieldIndexError, subfield_family, 64, 4, 2)
    verify_raises(NotASubfieldIndexError, subfield_family, 64, 6, 2)
    verify_raises(NotASubfieldIndexError, subfield_family, 13, 1, 2)
    verify_raises(BadIndexSetError, subfield_family, 64, 3, 9)

    print("Testing c0e_pds_criterion()")

    for q, e, s in ((13, 2, "(13,6,2,3)-PDS"),
                    (7, 2, "(7,3,1)-DS"),
                    (49, 4, "(49,12,5,2)-PDS"),
                    (37, 4, "(37,9,2)-DS"),
                    (73, 8, "(73,9,1)-DS"),
                    (25, 3, "(25,8,3,2)-PDS"),
                    (64, 3, "(64,21,8,6)-PDS"),
                    (4, 3, "(4,1,0)-DS"),
                    (3, 2, "(3,1,0)-DS"),
                    (5, 4, "(5,1,0)-DS"),
                    (7, 6, "(7,1,0)-DS"),
                    (9, 8, "(9,1,0)-DS"),
                    (13, 4, "not a PDS (t = +-2 != 0)"),
                    (7, 3, "not a PDS (d = +-1 != 0)")):
        verify_str(c0e_pds_criterion(q, e), s)

    verify(isinstance(c0e_pds_criterion(13, 4), NonExistence),
           "c0e_pds_criterion() did not return a NonExistence")
    verify_equal(c0e_pds_criterion(13, 4).kind, None)
    verify_raises(UnsupportedEError, c0e_pds_criterion, 11, 5)
    verify_raises(BadDivisorError, c0e_pds_criterion, 11, 4)

    print("Testing structural_checks()")

    for q, e in (49, 8), (49, 4), (13, 6), (64, 9), (81, 4), (81, 10), \
                (37, 4), (19, 6), (25, 12):
        report = structural_checks(q, e)
        verify(report.passed, "structural checks fail for q = {}, e = {}: {}"
                              .format(q, e, report.violations))

    report = structural_checks(64, 9)
    verify("e > f: C_0^e + {0} is a subfield" in
           [name for name, _, _ in report.checks],
           "subfield check not run for GF(64), e = 9")

    print("Testing CatalogRow and format_rows()")

    rows = [
        CatalogRow(13, 13, 1, 6, 2, "DPDF", 3, 2, 0, 1, True,
                   "partition-pds", True),
        CatalogRow(13, 13, 1, 6, 2, "EDF", 3, 2, 2, None, None,
                   "partition-pds", True),
    ]
    verify_equal(rows[0].f, 2)
    verify_equal(format_rows(rows, "csv"), """\
q,p,n,e,epsilon,f,kind,m,k,lambda,mu,proper,theorem,verified
13,13,1,6,2,2,DPDF,3,2,0,1,true,partition-pds,true
13,13,1,6,2,2,EDF,3,2,2,,,partition-pds,true
""")
    json_text = format_rows(rows, "json")
    verify('"mu": null' in json_text and '"proper": null' in json_text,
           "missing values are not null in JSON")
    verify('"lambda": 2' in json_text, "JSON does not use the CSV names")
    verify_equal(parse_rows(format_rows(rows, "csv")), rows)
    verify_raises(ParseError, parse_rows, "q,p\n13,13\n")
    verify_raises(ParseError, parse_rows,
                  format_rows(rows, "csv").replace("DPDF,3", "DPDF,x"))
    verify_raises(PDFamilyError, format_rows, rows, "xml")

    print("Testing Catalog and run_catalog()")

    catalog = Catalog(13, (2,), warn_to_stderr=False)
    rows = catalog.run()
    verify_equal(format_rows(rows), """\
q,p,n,e,epsilon,f,kind,m,k,lambda,mu,proper,theorem,verified
9,3,2,4,2,2,DPDF,2,2,1,0,true,partition-pds,true
9,3,2,4,2,2,EPDF,2,2,0,2,true,partition-pds,true
13,13,1,4,2,3,DPDF,2,3,0,2,true,partition-pds,true
13,13,1,4,2,3,EPDF,2,3,2,1,true,partition-pds,true
13,13,1,6,2,2,DPDF,3,2,0,1,true,partition-pds,true
13,13,1,6,2,2,EDF,3,2,2,,,partition-pds,true
""")
    verify("warning: C_0^2 is a DS in GF(7), but no e > 2 with 2 | e and "
           "f >= 2 divides 6" in catalog.warnings,
           "no warning for the empty GF(7) cell: {}".format(catalog.warnings))
    verify_equal(Catalog(13, (2,), warn=False).run(), rows)
    verify_equal(Catalog(13, (2,), warn=False).warnings, [])

    # All epsilons. C_0^6 in GF(7) and C_0^8 in GF(9) are {1}.
    catalog = Catalog(13, warn_to_stderr=False)
    verify_equal(catalog.run(), rows)
    for eps, q in (6, 7), (8, 9):
        msg = "warning: C_0^{} is a DS in GF({}), but no e > {} with {} | e " \
              "and f >= 2 divides {}".format(eps, q, eps, eps, q - 1)
        verify(msg in catalog.warnings,
               "missing '{}' in {}".format(msg, catalog.warnings))

    rows, text = run_catalog(30, (2, 4), warn=False)
    verify_equal(run_catalog(30, (2, 4), warn=False)[1], text)
    verify_equal(run_catalog(30, (2, 4), jobs=2, warn=False)[1], text)
    verify_equal(reverify_rows(rows), [])
    verify_equal(rows, sorted(rows, key=lambda row: (row.q, row.epsilon,
                                                     row.e)))
    verify(all(row.verified for row in rows), "unverified catalog row")

    neg, _ = run_catalog(50, (4,), include_negative=True, warn=False)
    verify_equal([(row.q, row.e) for row in neg
                  if row.family_kind == "none"], [(37, 12), (49, 12)])
    verify_equal(reverify_rows(neg), [])

    bad = list(rows)
    bad[0] = CatalogRow(bad[0].q, bad[0].p, bad[0].n, bad[0].e,
                        bad[0].epsilon, bad[0].family_kind, bad[0].m,
                        bad[0].k, bad[0].lam + 1, bad[0].mu, bad[0].proper,
                        bad[0].theorem_id, True)
    verify_equal(len(reverify_rows(bad)), 1)

    verify_raises(BoundExceededError, Catalog, 10**5)
    verify_raises(UnsupportedEError, Catalog, 13, (5,))
    verify_raises(PDFamilyError, run_catalog, 13, (2,), "xml")

    print("Testing verify_suite()")

    report = verifysuite.verify_suite(["gf13-squares-split",
                                       "z3xz3-subgroups", "gf41-e8"])
    verify(report.passed, "regression checks failed:\n" + str(report))

    report = verifysuite.verify_suite(
        [("corrupted table", verifysuite.table_check(bad))])
    verify_equal(report.failed, ["corrupted table"])
    verify("listed as" in str(report), "no mismatch detail in " + str(report))

    with open(os.path.join(TOP, "tests", "corrupted_table.csv")) as f:
        corrupted = parse_rows(f.read())
    report = verifysuite.verify_suite(
        [("corrupted fixture", verifysuite.table_check(corrupted))])
    verify_equal(report.failed, ["corrupted fixture"])

    def raising_check():
        raise ValueError("boom")

    report = verifysuite.verify_suite([("raises", raising_check),
                                       "gf13-squares-split"])
    verify_equal(report.failed, ["raises"])
    verify("raised ValueError: boom" in str(report),
           "exception not reported")
    verify_raises(PDFamilyError, verifysuite.verify_suite, ["no-such-check"])

    print("Testing the command-line tools")

    verify_equal(classify.classify(fam),
                 ["internal: (13,2,3,0,2)-DPDF",
                  "external: (13,2,3,2,1)-EPDF",
                  "sedf: none",
                  "pedf: none",
                  "D_1 = C_0^4",
                  "D_2 = C_2^4"])
    verify_equal(classify.classify(SetFamily(gf13, [[0, 1, 12]]))[-1],
                 "D_1 = {0} + C_0^6")
    verify_equal(classify.classify(fam, "2,5,6,7,8,11")[0],
                 "internal (relative): (13,2,3,2,0)-DPDF (relative)")

    args = argparse.Namespace(
        theorem="partition", q=49, e=16, epsilon=4, u=None, indices=None,
        index_sets=None, r=None, field=None, group=None, sets=None)
    lines = construct.run(args)
    verify("predicted internal: (49,4,3,2,0)-DPDF" in lines,
           "unexpected construct output {}".format(lines))
    verify("verified: yes" in lines, "construct result not verified")

    args.epsilon = None
    verify_raises(ParseError, construct.run, args)

    def run_tool(*args):
        # Exit status of a tool script, with output discarded

        with open(os.devnull, "w") as devnull:
            return subprocess.call([sys.executable] + list(args), cwd=TOP,
                                   stdout=devnull, stderr=devnull)

    verify_equal(run_tool("classify.py", "--field", "13", "--sets",
                          "1,3,9; 4,10,12"), 0)
    verify_equal(run_tool("classify.py", "--field", "12", "--sets", "1"), 2)
    verify_equal(run_tool("classify.py", "--field", "13", "--sets",
                          "1,3; 3,9"), 2)
    verify_equal(run_tool("catalog.py", "--qmax", "13", "--epsilon", "5"), 2)
    verify_equal(run_tool("catalog.py", "--qmax", "13", "--reverify"), 0)
    verify_equal(run_tool("verifysuite.py", "--table",
                          os.path.join("tests", "corrupted_table.csv")), 1)
    verify_equal(run_tool("fieldinfo.py", "--p", "3", "--n", "2",
                          "--table"), 0)
    verify_equal(run_tool("cyclo.py", "--q", "41", "--e", "8",
                          "--closed-form", "--epsilon", "2", "--uniform"), 0)

    print("\nAll selftests passed\n" if all_passed else
          "\nSome selftests failed\n")


def run_sweep_tests():
    # The bounded sweeps over all prime powers. These are the regression
    # checks of verifysuite.py, with wider bounds in obsessive mode.

    print("Running sweep tests...\n")

    def verify_check(name, func, *args):
        print("Testing " + name)
        report = verifysuite.verify_suite([(name, lambda: func(*args))])
        verify(report.passed, str(report))

    verify_check("closed forms against direct counts",
                 verifysuite.check_closed_forms, 2000 if obsessive else 500)

    verify_check("uniform cyclotomy", verifysuite.check_uniform_cyclotomy)

    verify_check("the GF(25) and GF(49) examples",
                 lambda: verifysuite.check_gf25_uniform_classes() +
                         verifysuite.check_gf49_partitions())

    verify_check("partition equivalences",
                 verifysuite.check_partition_equivalence, 200,
                 1000 if obsessive else 200)

    verify_check("structure of transversals, diagonals and phi",
                 verifysuite.check_structure, 500 if obsessive else 200)

    verify_check("the C_0^e criterion for q <= 121, f = 1 included",
                 verifysuite.check_criterion, 121)

    verify_check("negation symmetry of partial difference sets",
                 verifysuite.check_pds_symmetry, 500 if obsessive else 200)

    verify_check("unions of uniform classes for q' <= 729",
                 verifysuite.check_uniform_class_unions)

    verify_check("independence from the primitive element",
                 verifysuite.check_label_invariance, 121)

    verify_check("exp/log tables for q <= 2^14", verifysuite.check_exp_log,
                 2**14)

    verify_check("catalog rows for q <= 121", verifysuite.check_catalog_rows)

    print("Testing the catalog row count for q <= 121")

    # All default epsilons
    rows = Catalog(121, warn=False).run()
    if pin:
        with open(PINNED_COUNT, "w") as f:
            f.write("{}\n".format(len(rows)))
        print("Pinned the catalog row count to {}".format(len(rows)))
    elif not os.path.exists(PINNED_COUNT):
        fail("{} is missing".format(PINNED_COUNT))
    else:
        with open(PINNED_COUNT) as f:
            verify_equal(len(rows), int(f.read()))

    for q in 25, 49, 81:
        verify_equal(
            [row.as_tuple() for row in rows if row.q == q],
            [row.as_tuple() for row in Catalog(q, warn=False).run()
             if row.q == q])


if __name__ == "__main__":
    run_tests()
