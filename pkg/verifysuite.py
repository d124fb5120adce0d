#!/usr/bin/env python3

# Copyright (c) 2024, The pdfamilies developers
# SPDX-License-Identifier: ISC

"""
Runs the regression checks: every worked example the library is known to
reproduce, plus the structural invariants over all small fields. Each check
is reported as PASS or FAIL with the mismatches found. A failing check
never stops the run.

Sample usage:

  $ pdf-verify-suite
  $ pdf-verify-suite gf13-squares-split closed-forms
  $ pdf-verify-suite --list
  $ pdf-verify-suite --table table.csv

--table re-verifies a catalog table written by pdf-catalog instead of
running the checks.

The exit status is 1 if any check fails, and 2 for invalid input.
"""
import argparse
import math
import sys

import numpy as np
import sympy

import pdfamilies


def main():
    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=__doc__)

    parser.add_argument(
        "--list",
        action="store_true",
        help="List the check names and exit")

    parser.add_argument(
        "--table",
        metavar="FILE",
        help="Re-verify the catalog table in FILE (CSV)")

    parser.add_argument(
        "checks",
        metavar="CHECK",
        nargs="*",
        help="Checks to run (default: all)")

    args = parser.parse_args()

    if args.list:
        for name, _ in CHECKS:
            print(name)
        return

    try:
        if args.table is not None:
            try:
                with open(args.table) as f:
                    rows = pdfamilies.parse_rows(f.read())
            except OSError as e:
                parser.error("cannot read '{}': {}"
                             .format(args.table, e.strerror))
            report = verify_suite([("table " + args.table,
                                    table_check(rows))])
        else:
            report = verify_suite(args.checks or None)
    except pdfamilies.PDFamilyError as e:
        parser.error(str(e))

    print(report)
    if not report.passed:
        sys.exit(1)


class SuiteReport(object):
    """
    Result of verify_suite().

    results:
      List of (name, passed, mismatches) tuples, one per check run, with
      'mismatches' a list of strings (empty for passing checks).
    """
    __slots__ = (
        "results",
    )

    def __init__(self):
        self.results = []

    @property
    def failed(self):
        """
        The names of the failed checks.
        """
        return [name for name, passed, _ in self.results if not passed]

    @property
    def passed(self):
        return not self.failed

    def __str__(self):
        lines = []
        for name, passed, mismatches in self.results:
            lines.append("{} {}".format("PASS" if passed else "FAIL", name))
            lines.extend("  " + mismatch for mismatch in mismatches)
        lines.append("{} of {} check(s) passed".format(
            len(self.results) - len(self.failed), len(self.results)))
        return "\n".join(lines)


def verify_suite(checks=None):
    """
    Runs regression checks and returns a SuiteReport.

    checks (default: None):
      A list of check names (see CHECKS) and/or (name, function) pairs,
      where the function takes no arguments and returns a list of mismatch
      strings. If None, all of CHECKS are run.

    Raises PDFamilyError for unknown check names. A check that raises is
    reported as failed with the exception as its mismatch.
    """
    by_name = dict(CHECKS)
    if checks is None:
        checks = [name for name, _ in CHECKS]

    todo = []
    for check in checks:
        if isinstance(check, tuple):
            todo.append(check)
        elif check in by_name:
            todo.append((check, by_name[check]))
        else:
            raise pdfamilies.PDFamilyError(
                "unknown check '{}' (known: {})".format(
                    check, ", ".join(name for name, _ in CHECKS)))

    report = SuiteReport()
    for name, func in todo:
        try:
            mismatches = list(func())
        except Exception as e:
            mismatches = ["raised {}: {}".format(type(e).__name__, e)]
        report.results.append((name, not mismatches, mismatches))
    return report


def table_check(rows):
    """
    Returns a check function that re-verifies the CatalogRow instances
    'rows' with the oracle.
    """
    def check():
        return pdfamilies.reverify_rows(rows)

    return check


#
# Checks
#


def expect(mismatches, what, actual, expected):
    # Records a mismatch if 'actual' differs from 'expected' (compared as
    # strings, which works for FamilyClassification and plain values)

    if str(actual) != str(expected):
        mismatches.append("{}: got {}, expected {}".format(
            what, actual, expected))


def check_gf13_squares_split():
    mismatches = []
    field = pdfamilies.make_field(13, 1)
    fam = pdfamilies.SetFamily(field, [[1, 3, 9], [4, 10, 12]])
    expect(mismatches, "internal",
           pdfamilies.classify_family(fam, "internal"), "(13,2,3,0,2)-DPDF")
    expect(mismatches, "external",
           pdfamilies.classify_family(fam, "external"), "(13,2,3,2,1)-EPDF")

    expect(mismatches, "union", pdfamilies.classify_set(field, fam.union),
           "(13,6,2,3)-PDS")
    return mismatches


def check_z3_subgroups():
    mismatches = []
    group = pdfamilies.make_group((3, 3))
    fam = pdfamilies.parse_family("1:0,2:0; 0:1,0:2; 1:1,2:2; 1:2,2:1",
                                  group)
    expect(mismatches, "internal",
           pdfamilies.classify_family(fam, "internal"), "(9,4,2,1)-DDF")
    expect(mismatches, "external",
           pdfamilies.classify_family(fam, "external"), "(9,4,2,6)-EDF")

    single = pdfamilies.SetFamily(group, [[(1, 1)]])
    expect(mismatches, "singleton",
           pdfamilies.classify_family(single, "internal"), "(9,1,1,0)-DDF")
    return mismatches


def check_gf25_uniform_classes():
    mismatches = []
    for u, expected in GF25_UNIFORM:
        res = pdfamilies.uniform_classes(25, 6, u=u)
        expect(mismatches, "u = {} member".format(u),
               res.predicted["members"], "(25,4,3,0)-PDS")
        expect(mismatches, "u = {} internal".format(u),
               res.predicted["internal"], expected[0])
        expect(mismatches, "u = {} external".format(u),
               res.predicted["external"], expected[1])
        expect(mismatches, "u = {} verified".format(u), res.verified, True)
    return mismatches


def check_gf49_partitions():
    mismatches = []
    field = pdfamilies.make_field(7, 2)
    for e, expected in GF49_PARTITIONS:
        res = pdfamilies.partition_prediction(field, e, 4)
        if res is None:
            mismatches.append("e = {}: C_0^4 not recognized".format(e))
            continue
        pred, result = res
        if expected is None:
            expect(mismatches, "e = {} case".format(e), pred.case,
                   "not-a-DPDF")
        else:
            expect(mismatches, "e = {} internal".format(e), pred.internal,
                   expected[0])
            expect(mismatches, "e = {} external".format(e), pred.external,
                   expected[1])
        expect(mismatches, "e = {} verified".format(e), result.verified,
               True)
    return mismatches


def check_gf41_e8():
    mismatches = []
    pred = pdfamilies.squares_closed_form(41, 8)
    expect(mismatches, "internal", pred.internal, "(41,4,5,2)-DDF")
    expect(mismatches, "external", pred.external, "(41,4,5,7,8)-EPDF")
    expect(mismatches, "verified", pred.verified, True)

    table = pdfamilies.closed_form_cyclo_numbers(
        pdfamilies.prime_power_spec(41), 8)
    field = pdfamilies.make_field(41, 1)
    direct = pdfamilies.cyclotomic_matrix(
        pdfamilies.make_cyclotomic_context(field, 8))[:, 0].tolist()
    expect(mismatches, "(i,0)_8", list(table.values), direct)
    return mismatches


def check_catalog_rows(q_max=121):
    mismatches = []
    rows = pdfamilies.Catalog(q_max, warn=False).run()
    index = {(row.q, row.e, row.epsilon, row.family_kind): row
             for row in rows}

    for key, params in CATALOG_ROWS:
        if key[0] > q_max:
            continue
        row = index.get(key)
        if row is None:
            mismatches.append("no row q = {}, e = {}, epsilon = {}, {}"
                              .format(*key))
            continue
        expect(mismatches, "q = {}, e = {}, epsilon = {}, {}".format(*key),
               (row.m, row.k, row.lam, row.mu), params)

    for row in rows:
        if not row.verified:
            mismatches.append("unverified row {}".format(row.as_tuple()))
    mismatches.extend(pdfamilies.reverify_rows(rows))
    return mismatches


def check_closed_forms(q_max=500):
    mismatches = []
    for q in pdfamilies.prime_powers(q_max):
        spec = pdfamilies.prime_power_spec(q)
        field = None
        for e in (3, 4, 6, 8):
            if (q - 1) % e or (e == 6 and (q - 1)//e % 2):
                continue
            if field is None:
                field = pdfamilies.make_field(spec.p, spec.n)
            try:
                # Raises VerificationError on a mismatch
                pdfamilies.closed_form_cyclo_numbers(spec, e, field)
            except pdfamilies.PDFamilyError as ex:
                mismatches.append("q = {}, e = {}: {}".format(q, e, ex))
    return mismatches


def check_uniform_cyclotomy():
    mismatches = []
    for q_prime in UNIFORM_FIELDS:
        spec = pdfamilies.prime_power_spec(q_prime)
        for e in range(3, q_prime):
            if (q_prime - 1) % e:
                continue
            try:
                params = pdfamilies.uniformity(spec, e)
            except pdfamilies.PDFamilyError as ex:
                mismatches.append("q' = {}, e = {}: {}".format(q_prime, e, ex))
                continue
            if params is not None and not params.verified:
                mismatches.append("q' = {}, e = {} not verified"
                                  .format(q_prime, e))

    for e, u, expected in HADAMARD_UNIONS:
        res = pdfamilies.uniform_classes(16, e, u=u)
        expect(mismatches, "GF(16), e = {}, u = {} union".format(e, u),
               res.predicted["union"], expected)
        expect(mismatches, "GF(16), e = {}, u = {} union_ds".format(e, u),
               res.notes["union_ds"], True)
    return mismatches


def check_partition_equivalence(q_max=200, trials=200, seed=2024):
    # Random equal-size partitions of difference sets and partial difference
    # sets S: Int + Ext = Delta(S), the family is a DPDF exactly when it is
    # an EPDF, and the frequencies add up to those of S

    mismatches = []
    rng = np.random.default_rng(seed)

    instances = []
    for q in pdfamilies.prime_powers(q_max):
        if q % 2 == 0:
            continue
        spec = pdfamilies.prime_power_spec(q)
        field = pdfamilies.make_field(spec.p, spec.n)
        for eps in (2, 3, 4, 6, 8):
            if (q - 1) % eps or (q - 1)//eps < 2:
                continue
            S = field.exp_table[::eps]
            base = pdfamilies.classify_set(field, S)
            if base.kind is not None:
                instances.append((field, eps, base))

    for trial in range(trials):
        field, eps, base = instances[rng.integers(len(instances))]
        q = field.q
        rho = (q - 1)//eps

        if trial % 2:
            # Unions of cyclotomic classes C_(eps*i)^e
            es = [e for e in range(2*eps, q, eps) if (q - 1) % e == 0]
            if not es:
                continue
            e = es[rng.integers(len(es))]
            cctx = pdfamilies.make_cyclotomic_context(field, e)
            idx = eps*rng.permutation(e//eps)
            ms = [m for m in range(2, e//eps + 1) if (e//eps) % m == 0]
            m = ms[rng.integers(len(ms))]
            sets = [np.concatenate([cctx.cyclotomic_class(i) for i in part])
                    for part in idx.reshape(m, -1)]
        else:
            ms = [m for m in range(2, rho + 1) if rho % m == 0]
            m = ms[rng.integers(len(ms))]
            sets = rng.permutation(field.exp_table[::eps]).reshape(m, -1)

        fam = pdfamilies.SetFamily(field, sets)
        what = "GF({}), epsilon = {}, m = {}".format(q, eps, m)

        total = pdfamilies.int_family(fam) + pdfamilies.ext_family(fam)
        if total != pdfamilies.delta_internal(field, fam.union):
            mismatches.append(what + ": Int + Ext != Delta(S)")

        internal = pdfamilies.classify_family(fam, "internal")
        external = pdfamilies.classify_family(fam, "external")
        if (internal.kind is None) != (external.kind is None):
            mismatches.append("{}: internal {} but external {}".format(
                what, internal, external))
        elif internal.kind is not None and \
             (external.lam, external.mu) != (base.lam - internal.lam,
                                             base.mu - internal.mu):
            mismatches.append("{}: {} and {} do not add up to {}".format(
                what, internal, external, base))

    return mismatches


def check_structure(q_max=200):
    mismatches = []
    for q in pdfamilies.prime_powers(q_max):
        spec = pdfamilies.prime_power_spec(q)
        field = pdfamilies.make_field(spec.p, spec.n)
        for e in sympy.divisors(q - 1):
            if e < 2 or (q - 1)//e < 2:
                continue
            _check_context(pdfamilies.make_cyclotomic_context(field, e),
                           mismatches)
    return mismatches


def check_criterion(q_max=121):
    # Every cell the default catalog asks about, f = 1 included
    mismatches = []
    for q in pdfamilies.prime_powers(q_max):
        for eps in 2, 3, 4, 6, 8:
            if (q - 1) % eps:
                continue
            try:
                pdfamilies.c0e_pds_criterion(q, eps)
            except pdfamilies.PDFamilyError as ex:
                mismatches.append("q = {}, e = {}: {}".format(q, eps, ex))
    return mismatches


def check_pds_symmetry(q_max=200):
    # A partial difference set C_0^e not containing 0 satisfies D = -D
    mismatches = []
    for q in pdfamilies.prime_powers(q_max):
        spec = pdfamilies.prime_power_spec(q)
        field = pdfamilies.make_field(spec.p, spec.n)
        for e in sympy.divisors(q - 1):
            if e < 2 or (q - 1)//e < 2:
                continue
            D = field.exp_table[::e]
            res = pdfamilies.classify_set(field, D)
            if res.kind == "PDS" and \
               not np.array_equal(np.sort(field.neg_array(D)), np.sort(D)):
                mismatches.append("GF({}): {} C_0^{} is not closed under "
                                  "negation".format(q, res, e))
    return mismatches


def check_uniform_class_unions():
    mismatches = []
    for q_prime in UNIFORM_FIELDS:
        spec = pdfamilies.prime_power_spec(q_prime)
        field = pdfamilies.make_field(spec.p, spec.n)
        for e in range(3, q_prime):
            if (q_prime - 1) % e or (q_prime - 1)//e < 2 or \
               pdfamilies.uniformity(spec, e, verify=False) is None:
                continue
            for u in range(2, e):
                what = "GF({}), e = {}, u = {}".format(q_prime, e, u)
                try:
                    # Raises VerificationError if a prediction is off
                    res = pdfamilies.uniform_classes(field, e, u=u)
                except pdfamilies.PDFamilyError as ex:
                    mismatches.append("{}: {}".format(what, ex))
                    continue
                expect(mismatches, what + " union",
                       pdfamilies.classify_set(field, res.family.union),
                       res.predicted["union"])
                expect(mismatches, what + " verified", res.verified, True)
    return mismatches


def check_label_invariance(q_max=121, alphas=3):
    # Changing the primitive element permutes the classes C_i^e, which must
    # not change any classification
    mismatches = []
    for q in pdfamilies.prime_powers(q_max):
        spec = pdfamilies.prime_power_spec(q)
        base = pdfamilies.make_field(spec.p, spec.n)
        choices = [int(base.exp_table[k]) for k in range(1, q - 1)
                   if math.gcd(k, q - 1) == 1][:alphas]

        first = None
        for alpha in choices:
            field = pdfamilies.make_field(spec.p, spec.n, alpha=alpha)
            outcome = _classifications(field)
            if first is None:
                first = outcome
            elif outcome != first:
                diff = [(a, b) for a, b in zip(first, outcome) if a != b]
                mismatches.append("GF({}), alpha = {} vs {}: {}".format(
                    q, choices[0], alpha, diff[:3]))
    return mismatches


def _classifications(field):
    # Classification of every C_0^e and every partition prediction in
    # 'field', as comparable tuples

    q = field.q
    res = []
    for e in sympy.divisors(q - 1):
        if e < 2 or (q - 1)//e < 2:
            continue
        res.append((e, str(pdfamilies.classify_set(field,
                                                   field.exp_table[::e]))))
        for eps in sympy.divisors(e):
            if not 2 <= eps < e:
                continue
            pred = pdfamilies.partition_prediction(field, e, eps)
            if pred is not None:
                pred = (str(pred[0].internal), str(pred[0].external),
                        pred[0].case)
            res.append((e, eps, pred))
    return res


def check_exp_log(q_max=2**14):
    mismatches = []
    for q in pdfamilies.prime_powers(q_max):
        spec = pdfamilies.prime_power_spec(q)
        field = pdfamilies.make_field(spec.p, spec.n)
        exp = field.exp_table
        log = field.log_table
        nonzero = np.arange(1, q)

        if exp[0] != 1 or \
           not np.array_equal(np.sort(exp), nonzero) or \
           not np.array_equal(log[exp], np.arange(q - 1)) or \
           not np.array_equal(exp[log[1:]], nonzero):
            mismatches.append("GF({}): exp and log are not inverse"
                              .format(q))
    return mismatches


def _check_context(cctx, mismatches):
    field = cctx.field
    q = field.q
    e = cctx.e
    f = cctx.f
    what = "GF({}), e = {}".format(q, e)

    # T_(f-r) = -T_r, and the T_r make up Delta(C_0^e)
    ts = [pdfamilies.transversal(cctx, r) for r in range(1, f)]
    for r in range(1, f):
        if not np.array_equal(np.sort(ts[f - r - 1].elements),
                              np.sort(field.neg_array(ts[r - 1].elements))):
            mismatches.append("{}: T_{} != -T_{}".format(what, f - r, r))
    counts = np.bincount(np.concatenate([t.elements for t in ts]),
                         minlength=q)
    delta = pdfamilies.delta_internal(field, cctx.cyclotomic_class(0))
    if not np.array_equal(counts, delta.counts):
        mismatches.append(what + ": the transversals do not make up "
                                 "Delta(C_0^e)")

    # The T_(r,j), r = 1..f, make up Delta(C_j^e, C_0^e), and each lies in
    # a single class
    c0 = cctx.cyclotomic_class(0)
    for j in range(1, e):
        ts = [pdfamilies.external_transversal(cctx, r, j)
              for r in range(1, f + 1)]
        counts = np.bincount(np.concatenate([t.elements for t in ts]),
                             minlength=q)
        delta = pdfamilies.delta_external(field, cctx.cyclotomic_class(j), c0)
        if not np.array_equal(counts, delta.counts):
            mismatches.append("{}: the T_(r,{}) do not make up "
                              "Delta(C_{}^e, C_0^e)".format(what, j, j))
        for t in ts:
            if (cctx.class_indices(t.elements) != t.class_index).any():
                mismatches.append("{}: T_({},{}) is not inside C_{}^e"
                                  .format(what, t.r, j, t.class_index))

    for eps in sympy.divisors(e):
        if eps < 2:
            continue
        profile = pdfamilies.phi_profile(cctx, eps)
        where = "{}, epsilon = {}".format(what, eps)

        if sum(profile.phi) != f - 1:
            mismatches.append("{}: phi {} does not sum to f - 1".format(
                where, profile.phi))

        for desc, lhs, rhs in pdfamilies.pairing_relations(profile, q):
            if lhs != rhs:
                mismatches.append("{}: {} fails ({} != {})".format(
                    where, desc, lhs, rhs))

        if pdfamilies.minus_one_class(cctx, eps) != \
           pdfamilies.predicted_minus_one_class(q, eps):
            mismatches.append(where + ": -1 in the wrong class")

        if f % 2 == 0:
            minus_two = field.neg(field.add(1, 1))
            d = pdfamilies.diagonal(cctx, eps, f//2)
            if not np.array_equal(
                    np.sort(d.elements),
                    np.sort(field.mul_scalar(minus_two,
                                             field.exp_table[::eps]))):
                mismatches.append(where + ": D_(f/2) != (-2)C_0^epsilon")


# (u, (internal, external)) for the classes of order 6 in GF(25)
GF25_UNIFORM = (
    (2, ("(25,2,4,3,0)-DPDF", "(25,2,4,0,2)-EPDF")),
    (3, ("(25,3,4,3,0)-DPDF", "(25,3,4,2,6)-EPDF")),
    (4, ("(25,4,4,3,0)-DPDF", "(25,4,4,6,12)-EPDF")),
    (5, ("(25,5,4,3,0)-DPDF", "(25,5,4,12,20)-EPDF")),
)

# (e, (internal, external)) for epsilon = 4 in GF(49). None: not a DPDF.
GF49_PARTITIONS = (
    (8, ("(49,2,6,5,0)-DPDF", "(49,2,6,0,2)-EPDF")),
    (16, ("(49,4,3,2,0)-DPDF", "(49,4,3,3,2)-EPDF")),
    (24, ("(49,6,2,1,0)-DPDF", "(49,6,2,4,2)-EPDF")),
    (12, None),
)

# ((q, e, epsilon, kind), (m, k, lambda, mu)) rows the catalog must contain
CATALOG_ROWS = (
    ((13, 6, 2, "DPDF"), (3, 2, 0, 1)),
    ((13, 6, 2, "EDF"), (3, 2, 2, None)),
    ((17, 4, 2, "DPDF"), (2, 4, 1, 2)),
    ((17, 4, 2, "EDF"), (2, 4, 2, None)),
    ((25, 12, 3, "DPDF"), (4, 2, 1, 0)),
    ((25, 12, 3, "EDF"), (4, 2, 2, None)),
    ((25, 12, 6, "DPDF"), (2, 2, 1, 0)),
    ((25, 12, 6, "EPDF"), (2, 2, 2, 0)),
    ((37, 4, 2, "DDF"), (2, 9, 4, None)),
    ((37, 4, 2, "EPDF"), (2, 9, 4, 5)),
    ((41, 8, 2, "DDF"), (4, 5, 2, None)),
    ((41, 8, 2, "EPDF"), (4, 5, 7, 8)),
    ((49, 16, 4, "DPDF"), (4, 3, 2, 0)),
    ((49, 16, 4, "EPDF"), (4, 3, 3, 2)),
    ((49, 16, 8, "DPDF"), (2, 3, 2, 0)),
    ((49, 16, 8, "EPDF"), (2, 3, 3, 0)),
    ((49, 24, 8, "DPDF"), (3, 2, 1, 0)),
    ((49, 24, 8, "EPDF"), (3, 2, 4, 0)),
    ((64, 9, 3, "DPDF"), (3, 7, 6, 0)),
    ((64, 9, 3, "EPDF"), (3, 7, 2, 6)),
    ((121, 12, 6, "DPDF"), (2, 10, 9, 0)),
    ((121, 12, 6, "EPDF"), (2, 10, 0, 2)),
)

UNIFORM_FIELDS = (16, 49, 64, 81, 121, 169, 625, 729)

# (e, u, union) in GF(16): the unions that degenerate to difference sets
HADAMARD_UNIONS = (
    (5, 2, "(16,6,2)-DS"),
    (3, 2, "(16,10,6)-DS"),
)

CHECKS = (
    ("gf13-squares-split", check_gf13_squares_split),
    ("z3xz3-subgroups", check_z3_subgroups),
    ("gf25-uniform-classes", check_gf25_uniform_classes),
    ("gf49-partitions", check_gf49_partitions),
    ("gf41-e8", check_gf41_e8),
    ("catalog-rows", check_catalog_rows),
    ("closed-forms", check_closed_forms),
    ("uniform-cyclotomy", check_uniform_cyclotomy),
    ("partition-equivalence", check_partition_equivalence),
    ("structure", check_structure),
    ("criterion", check_criterion),
    ("pds-symmetry", check_pds_symmetry),
    ("uniform-class-unions", check_uniform_class_unions),
    ("label-invariance", check_label_invariance),
    ("exp-log", check_exp_log),
)


if __name__ == "__main__":
    main()
