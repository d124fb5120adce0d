#!/usr/bin/env python3

# Copyright (c) 2024, The pdfamilies developers
# SPDX-License-Identifier: ISC

"""
Classifies a family of disjoint sets in GF(q) or in Z_n1 x ... x Z_nk by
counting its internal and external differences, and prints the internal
(DDF/DPDF) and external (EDF/EPDF, SEDF, PEDF) classifications.

Sample usage:

  $ pdf-classify --field 13 --sets "1,3,9; 4,10,12"
  internal: (13,2,3,0,2)-DPDF
  external: (13,2,3,2,1)-EPDF
  ...

  $ pdf-classify --group 3x3 --sets "1:0,2:0; 0:1,0:2; 1:1,2:2; 1:2,2:1"

Sets are separated by ';' and elements by ','. Field elements are integer
encodings. Group elements are encodings or ':'-separated tuples.

For field inputs, each set is also written as a union of cyclotomic
classes C_i^e (smallest possible e).

With --relative, the frequencies are tested on the reference set T given
there (and on its complement in G*) instead of on the union of the sets.

The exit status is 2 for invalid input.
"""
import argparse

import pdfamilies


def main():
    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=__doc__)

    where = parser.add_mutually_exclusive_group(required=True)

    where.add_argument(
        "--field",
        metavar="Q",
        type=int,
        help="Work in GF(Q)")

    where.add_argument(
        "--group",
        metavar="N1xN2x...",
        help="Work in Z_N1 x Z_N2 x ...")

    parser.add_argument(
        "--sets",
        required=True,
        help="The family, e.g. \"1,3,9; 4,10,12\"")

    parser.add_argument(
        "--relative",
        metavar="T",
        help="Classify relative to the reference set T (',' separated)")

    args = parser.parse_args()

    try:
        if args.field is not None:
            spec = pdfamilies.prime_power_spec(args.field)
            group = pdfamilies.make_field(spec.p, spec.n)
        else:
            group = pdfamilies.parse_group(args.group)

        fam = pdfamilies.parse_family(args.sets, group)
        for line in classify(fam, args.relative):
            print(line)
    except pdfamilies.PDFamilyError as e:
        parser.error(str(e))


def classify(fam, relative=None):
    """
    Returns the report lines for 'fam'. Families that contain 0, or with
    sets of different sizes, only get the classifications that allow it.
    'relative' is the reference set specification for --relative, or None.
    """
    group = fam.group
    lines = []

    if relative is not None:
        T = pdfamilies.parse_family(relative, group).sets[0]
        for mode in "internal", "external":
            lines.append("{} (relative): {}".format(
                mode, pdfamilies.classify_relative(fam, T, mode)))
        return lines

    equal = len(set(fam.sizes)) == 1
    if fam.contains_zero or not equal:
        lines.append("internal: none (0 in a set)" if fam.contains_zero else
                     "internal: none (set sizes {} differ)".format(fam.sizes))
        lines.append("sedf: {}".format(pdfamilies.classify_sedf(fam)))
        lines.append("pedf: {}".format(pdfamilies.classify_pedf(fam)))
    else:
        external = pdfamilies.classify_family(fam, "external")
        lines.append("internal: {}".format(
            pdfamilies.classify_family(fam, "internal")))
        lines.append("external: {}".format(external))
        lines.append("sedf: {}".format(external.sedf))
        lines.append("pedf: {}".format(external.pedf))

    if isinstance(group, pdfamilies.FieldContext):
        for i, D in enumerate(fam.sets, 1):
            lines.append("D_{} = {}".format(i, decomposition_str(group, D)))

    return lines


def decomposition_str(field, D):
    # "C_0^4", "C_0^6 + C_3^6", with "{0} + " in front if 0 is in D

    decomp = pdfamilies.cyclotomic_decomposition(field, D)
    zero = "{0}" if D.size and D[0] == 0 else ""
    if decomp is None:
        return zero
    e, indices = decomp
    classes = " + ".join("C_{}^{}".format(i, e) for i in indices)
    return zero + " + " + classes if zero else classes


if __name__ == "__main__":
    main()
