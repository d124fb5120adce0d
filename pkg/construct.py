#!/usr/bin/env python3

# Copyright (c) 2024, The pdfamilies developers
# SPDX-License-Identifier: ISC

"""
Runs one of the DPDF/EPDF constructions and prints the predicted
classifications, whether the oracle confirmed them, and the construction's
notes.

Sample usage:

  $ pdf-construct --theorem pds-collection --field 13 --sets "1,3,9; 4,10,12"
  $ pdf-construct --theorem uniform --q 25 --e 6 --u 3
  $ pdf-construct --theorem uniform-unions --q 81 --e 10 --index-sets "0,1;2,3"
  $ pdf-construct --theorem partition --q 49 --e 16 --epsilon 4
  $ pdf-construct --theorem squares --q 41 --e 8
  $ pdf-construct --theorem subfield --q 64 --r 3 --u 3
  $ pdf-construct --theorem criterion --q 49 --e 4
  $ pdf-construct --theorem structural --q 49 --e 8

Theorems and the options they use:

  pds-collection  --field Q or --group N1xN2x..., --sets
  uniform         --q, --e, --u or --indices
  uniform-unions  --q, --e, --index-sets
  partition       --q, --e, --epsilon
  squares         --q, --e
  subfield        --q, --r, --u or --indices
  criterion       --q, --e  (is C_0^e a DS or PDS?)
  structural      --q, --e  (structural consequences of the theory)

The exit status is 1 if a prediction disagrees with the oracle, and 2 for
invalid input.
"""
import argparse
import sys

import pdfamilies


def main():
    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=__doc__)

    parser.add_argument(
        "--theorem",
        required=True,
        choices=("pds-collection", "uniform", "uniform-unions", "partition",
                 "squares", "subfield", "criterion", "structural"),
        help="The construction to run")

    parser.add_argument(
        "--q",
        type=int,
        help="The field order")

    parser.add_argument(
        "--e",
        type=int,
        help="The number of cyclotomic classes")

    parser.add_argument(
        "--epsilon",
        type=int,
        help="The coarser class count (partition)")

    parser.add_argument(
        "--u",
        type=int,
        help="Number of classes (uniform, subfield)")

    parser.add_argument(
        "--indices",
        help="Class indices, ',' separated (uniform, subfield)")

    parser.add_argument(
        "--index-sets",
        help="Index sets, e.g. \"0,1;2,3\" (uniform-unions)")

    parser.add_argument(
        "--r",
        type=int,
        help="Subfield degree (subfield)")

    parser.add_argument(
        "--field",
        metavar="Q",
        type=int,
        help="Work in GF(Q) (pds-collection)")

    parser.add_argument(
        "--group",
        metavar="N1xN2x...",
        help="Work in Z_N1 x Z_N2 x ... (pds-collection)")

    parser.add_argument(
        "--sets",
        help="The PDS collection, e.g. \"1,3,9; 4,10,12\" (pds-collection)")

    args = parser.parse_args()

    try:
        for line in run(args):
            print(line)
    except pdfamilies.VerificationError as e:
        sys.exit("error: " + str(e))
    except pdfamilies.PDFamilyError as e:
        parser.error(str(e))


def run(args):
    """
    Runs the construction selected by 'args' and returns the report lines.
    """
    theorem = args.theorem

    if theorem == "pds-collection":
        need(args, "sets")
        if args.field is not None:
            spec = pdfamilies.prime_power_spec(args.field)
            group = pdfamilies.make_field(spec.p, spec.n)
        elif args.group is not None:
            group = pdfamilies.parse_group(args.group)
        else:
            raise pdfamilies.ParseError("pds-collection needs --field or "
                                        "--group")
        fam = pdfamilies.parse_family(args.sets, group)
        return result_lines(pdfamilies.from_pds_collection(group, fam.sets))

    need(args, "q")
    if theorem == "subfield":
        need(args, "r")
        return result_lines(pdfamilies.subfield_family(
            args.q, args.r, args.u, indices(args)))

    need(args, "e")
    if theorem == "uniform":
        return result_lines(pdfamilies.uniform_classes(
            args.q, args.e, indices(args), args.u))

    if theorem == "uniform-unions":
        need(args, "index_sets")
        return result_lines(pdfamilies.uniform_unions(
            args.q, args.e, pdfamilies.parse_index_sets(args.index_sets)))

    if theorem == "partition":
        need(args, "epsilon")
        res = pdfamilies.partition_prediction(args.q, args.e, args.epsilon)
        if res is None:
            return ["C_0^{} is neither a difference set nor a proper partial "
                    "difference set in GF({})".format(args.epsilon, args.q)]
        pred, result = res
        return prediction_lines(pred) + result_lines(result)

    if theorem == "squares":
        return prediction_lines(
            pdfamilies.squares_closed_form(args.q, args.e))

    if theorem == "criterion":
        return ["C_0^{} in GF({}): {}".format(
            args.e, args.q, pdfamilies.c0e_pds_criterion(args.q, args.e))]

    report = pdfamilies.structural_checks(args.q, args.e)
    lines = ["{}: {} ({})".format(name, "ok" if passed else "VIOLATED",
                                  detail)
             for name, passed, detail in report.checks]
    if not report.checks:
        lines.append("no structural checks apply")
    if not report.passed:
        raise pdfamilies.VerificationError(
            "{} structural check(s) violated:\n{}".format(
                len(report.violations), "\n".join(lines)))
    return lines


def need(args, name):
    # Raises ParseError if the option 'name' was not given

    if getattr(args, name) is None:
        raise pdfamilies.ParseError("--theorem {} needs --{}".format(
            args.theorem, name.replace("_", "-")))


def indices(args):
    if args.indices is None:
        return None
    return pdfamilies.parse_index_sets(args.indices)[0]


def result_lines(result):
    lines = ["theorem: " + result.theorem_id,
             "family: {} set(s) of sizes {} in a group of order {}".format(
                 result.family.m, result.family.sizes,
                 result.family.group.order)]
    for key in "members", "union", "internal", "external":
        if key in result.predicted:
            lines.append("{}: {}".format(key, result.predicted[key]))
    lines.append("verified: " + ("yes" if result.verified else
                                 "no (group above the verification bound)"))
    for key in sorted(result.notes):
        lines.append("note {}: {}".format(key, result.notes[key]))
    return lines


def prediction_lines(pred):
    lines = ["case: " + pred.case,
             "base: {}".format(pred.base),
             "phi: {}, kappa = {}".format(pred.phi, pred.kappa),
             "predicted internal: {}".format(pred.internal),
             "predicted external: {}".format(pred.external)]
    if pred.proper_guaranteed is not None:
        lines.append("both proper guaranteed: {}".format(
            "yes" if pred.proper_guaranteed else "no"))
    if pred.profile is None:
        lines.append("checked against the phi profile: " +
                     ("yes" if pred.verified else "no"))
    return lines


if __name__ == "__main__":
    main()
