#!/usr/bin/env python3

# Copyright (c) 2024, The pdfamilies developers
# SPDX-License-Identifier: ISC

"""
Regenerates the table of cyclotomic partition families. For every prime
power q <= QMAX and every epsilon in the --epsilon list with epsilon | q - 1
and C_0^epsilon a difference set or a proper partial difference set, the
families {C_0^e, C_epsilon^e, ..., C_(e-epsilon)^e}, epsilon | e | q - 1,
e > epsilon, are classified and checked against the oracle. Each family
gives an internal (DDF/DPDF) and an external (EDF/EPDF) row.

Sample usage:

  $ pdf-catalog --qmax 121
  $ pdf-catalog --qmax 121 --epsilon 4 --format json --output table.json

The CSV header is

  q,p,n,e,epsilon,f,kind,m,k,lambda,mu,proper,theorem,verified

with empty mu and proper cells for DDF/EDF rows (null in JSON). Rows are
sorted by (q, epsilon, e), so the output does not depend on --jobs.

QMAX is limited by the PDF_VERIFY_BOUND and PDF_FIELD_BOUND environment
variables, since every row is verified.

The exit status is 1 if a row fails verification, and 2 for invalid input
or if the output file cannot be written.
"""
import argparse
import sys

import pdfamilies


def main():
    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=__doc__)

    parser.add_argument(
        "--qmax",
        type=int,
        required=True,
        help="Largest field order")

    parser.add_argument(
        "--epsilon",
        default="2,3,4,6,8",
        help="',' separated epsilon values from 2, 3, 4, 6, 8 "
             "(default: all)")

    parser.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="Output format (default: csv)")

    parser.add_argument(
        "--include-negative",
        action="store_true",
        help="Add a 'none' row for families that are neither DPDFs nor "
             "EPDFs")

    parser.add_argument(
        "--reverify",
        action="store_true",
        help="Rebuild every emitted family and classify it again")

    parser.add_argument(
        "--jobs", "-j",
        type=int,
        default=1,
        help="Number of worker processes (default: 1)")

    parser.add_argument(
        "--output", "-o",
        metavar="FILE",
        help="Write the table to FILE instead of stdout")

    args = parser.parse_args()

    try:
        epsilons = [int(eps) for eps in args.epsilon.split(",")]
    except ValueError:
        parser.error("malformed --epsilon list '{}'".format(args.epsilon))

    try:
        rows, text = pdfamilies.run_catalog(
            args.qmax, epsilons, args.format, args.include_negative,
            args.jobs)

        if args.reverify:
            mismatches = pdfamilies.reverify_rows(rows)
            if mismatches:
                sys.exit("error: {} row(s) failed re-verification:\n{}"
                         .format(len(mismatches), "\n".join(mismatches)))
            # Make it possible to filter this message out
            print("re-verified {} row(s)".format(len(rows)), file=sys.stderr)
    except pdfamilies.VerificationError as e:
        sys.exit("error: " + str(e))
    except pdfamilies.PDFamilyError as e:
        parser.error(str(e))

    if args.output is None:
        sys.stdout.write(text)
        return

    try:
        with open(args.output, "w", newline="") as f:
            f.write(text)
    except OSError as e:
        parser.error("cannot write '{}': {}".format(args.output, e.strerror))


if __name__ == "__main__":
    main()
