#!/usr/bin/env python3

# Copyright (c) 2024, The pdfamilies developers
# SPDX-License-Identifier: ISC

"""
Prints the construction data of the finite field GF(p^n): the modulus
polynomial, the primitive element and the subfields, optionally followed by
the table of powers of the primitive element, or the result of a single
field operation.

Sample usage:

  $ pdf-field-info --p 3 --n 2
  $ pdf-field-info --p 3 --n 2 --table
  $ pdf-field-info --p 2 --n 4 --arith mul 3 7

Elements are given and printed as integer encodings (see the pdfamilies
module docstring), with the polynomial form next to them.

The exit status is 2 for invalid input.
"""
import argparse
import sys

import pdfamilies


def main():
    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=__doc__)

    parser.add_argument(
        "--p",
        type=int,
        required=True,
        help="The characteristic")

    parser.add_argument(
        "--n",
        type=int,
        default=1,
        help="The extension degree (default: 1)")

    parser.add_argument(
        "--alpha",
        type=int,
        help="Encoding of the primitive element to use instead of the "
             "smallest one")

    parser.add_argument(
        "--table",
        action="store_true",
        help="Print k, alpha^k for k = 0, ..., q - 2")

    parser.add_argument(
        "--arith",
        nargs="+",
        metavar="ARG",
        help="Perform one field operation: OP X [Y], with OP one of add, "
             "sub, neg, mul, inv, pow, dlog")

    args = parser.parse_args()

    try:
        field = pdfamilies.make_field(args.p, args.n, args.alpha)
        if args.arith:
            print(arith(field, args.arith))
            return
    except pdfamilies.PDFamilyError as e:
        parser.error(str(e))

    print("GF({}) = GF({}^{})".format(field.q, field.p, field.n))
    print("modulus: " + field.modulus_str)
    print("primitive element: {} (encoding {})"
          .format(field.element_str(field.alpha), field.alpha))
    print("subfields: " + ", ".join(
        "GF({}^{})".format(field.p, r)
        for r in range(1, field.n + 1) if field.n % r == 0))

    if args.table:
        width = len(str(field.q - 2))
        for k, x in enumerate(field.exp_table):
            x = int(x)
            sys.stdout.write("alpha^{:<{}} = {:>{}}  {}\n".format(
                k, width, x, len(str(field.q - 1)), field.element_str(x)))


def arith(field, arith_args):
    # Runs 'pdf-field-info --arith' and returns the result as a string

    op = arith_args[0]
    try:
        operands = [int(arg) for arg in arith_args[1:]]
    except ValueError:
        raise pdfamilies.ParseError(
            "operands must be integers, got {}".format(arith_args[1:]))
    if not 1 <= len(operands) <= 2:
        raise pdfamilies.ParseError(
            "--arith takes an operation and one or two operands")

    res = pdfamilies.field_arith(field, op, *operands)
    if op == "dlog" or field.n == 1:
        return str(res)
    return "{} ({})".format(res, field.element_str(res))


if __name__ == "__main__":
    main()
