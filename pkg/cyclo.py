#!/usr/bin/env python3

# Copyright (c) 2024, The pdfamilies developers
# SPDX-License-Identifier: ISC

"""
Prints the cyclotomic numbers (i,j)_e of GF(q), counted directly, together
with optional derived data.

Sample usage:

  $ pdf-cyclo --q 13 --e 4
  $ pdf-cyclo --q 41 --e 8 --closed-form
  $ pdf-cyclo --q 49 --e 16 --epsilon 4
  $ pdf-cyclo --q 16 --e 5 --uniform

--closed-form also computes (i,0)_e from the closed formulas for e in
(3, 4, 6, 8) and shows the quadratic representation and sign resolution
used. --epsilon prints the phi profile of C_0^e relative to the classes of
order EPSILON, the pairing relations and the class of -1. --uniform
decides whether the cyclotomy is uniform and prints its three values.

The exit status is 1 if a closed form or a uniform table disagrees with
the direct counts, and 2 for invalid input.
"""
import argparse
import sys

import pdfamilies


def main():
    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=__doc__)

    parser.add_argument(
        "--q",
        type=int,
        required=True,
        help="The field order")

    parser.add_argument(
        "--e",
        type=int,
        required=True,
        help="The number of cyclotomic classes (a divisor of q - 1)")

    parser.add_argument(
        "--closed-form",
        action="store_true",
        help="Compare with the closed-form (i,0)_e")

    parser.add_argument(
        "--epsilon",
        type=int,
        help="Print the phi profile relative to the classes of this order")

    parser.add_argument(
        "--uniform",
        action="store_true",
        help="Check for uniform cyclotomy")

    args = parser.parse_args()

    try:
        spec = pdfamilies.prime_power_spec(args.q)
        field = pdfamilies.make_field(spec.p, spec.n)
        cctx = pdfamilies.make_cyclotomic_context(field, args.e)

        print_matrix(cctx)
        if args.closed_form:
            print_closed_form(field, args.e)
        if args.epsilon is not None:
            print_profile(cctx, args.epsilon)
        if args.uniform:
            print_uniform(spec, args.e)
    except pdfamilies.VerificationError as e:
        sys.exit("error: " + str(e))
    except pdfamilies.PDFamilyError as e:
        parser.error(str(e))


def print_matrix(cctx):
    matrix = pdfamilies.cyclotomic_matrix(cctx)
    width = max(2, len(str(matrix.max())))

    print("cyclotomic numbers (i,j)_{} of GF({}), f = {}:"
          .format(cctx.e, cctx.field.q, cctx.f))
    print("     " + " ".join("{:>{}}".format(j, width)
                             for j in range(cctx.e)))
    for i, row in enumerate(matrix):
        print("{:>3}: ".format(i) +
              " ".join("{:>{}}".format(int(x), width) for x in row))


def print_closed_form(field, e):
    table = pdfamilies.closed_form_cyclo_numbers(field.spec, e, field)

    print("closed form ({}):".format(table.case))
    print("  representation: " + ", ".join(
        "{} = {}".format(name, val)
        for name, val in sorted(table.representation.items())))
    print("  candidates: {}".format(len(table.candidates)))
    print("  resolved by: " + ", ".join(
        "({},0)".format(i) for i in table.resolved_by))
    print("  (i,0)_{}: {}".format(e, ", ".join(map(str, table.values))))
    print("  equal to the direct counts")


def print_profile(cctx, epsilon):
    field = cctx.field
    profile = pdfamilies.phi_profile(cctx, epsilon)

    print("phi profile, epsilon = {}:".format(epsilon))
    print("  phi = {}".format(profile.phi))
    print("  psi = {}".format(profile.psi))
    print("  kappa = {}".format(profile.kappa))
    if profile.central_class is not None:
        print("  -2 in C_{}^{}".format(profile.central_class, epsilon))
    print("  -1 in C_{}^{} (predicted C_{}^{})".format(
        pdfamilies.minus_one_class(cctx, epsilon), epsilon,
        pdfamilies.predicted_minus_one_class(field.q, epsilon), epsilon))

    relations = pdfamilies.pairing_relations(profile, field.q)
    if not relations:
        print("  no pairing relations apply")
    for desc, lhs, rhs in relations:
        print("  {}: {} = {} {}".format(
            desc, lhs, rhs, "holds" if lhs == rhs else "FAILS"))


def print_uniform(spec, e):
    params = pdfamilies.uniformity(spec, e)
    if params is None:
        print("not uniform: -1 is not a power of {} mod {}".format(spec.p, e))
        return

    print("uniform: q = {}, beta = {}, eta = {}".format(
        params.q, params.beta, params.eta))
    print("  (0,0) = {}, (0,i) = (i,0) = (i,i) = {}, other (i,j) = {}"
          .format(*params.table))
    print("  " + ("equal to the direct counts" if params.verified else
                  "not checked (field above the verification bound)"))


if __name__ == "__main__":
    main()
