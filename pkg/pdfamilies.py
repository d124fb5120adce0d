# Copyright (c) 2024, The pdfamilies developers
# SPDX-License-Identifier: ISC

"""
Overview
========

pdfamilies is a library for building and checking disjoint and external
partial difference families (DPDFs and EPDFs), together with the related
objects they are made of: difference sets, partial difference sets and
difference families over finite fields and finite abelian groups.

Every construction comes with predicted parameters, and the prediction is
compared against a brute-force oracle that counts difference multisets
directly. A result is never reported on the strength of a formula alone.

The library version is available in pdfamilies.VERSION, which is a
(<major>, <minor>, <patch>) tuple, e.g. (1, 0, 0).


Main entry points
=================

  - make_field() and make_group() build the groups everything else works
    in. Group elements are plain integers (canonical encodings, see below).

  - SetFamily, delta_internal(), delta_external(), classify_set(),
    classify_family() and classify_relative() form the oracle.

  - make_cyclotomic_context() and the cyclotomy functions: cyclotomic
    classes and numbers, transversals, diagonals, phi profiles, quadratic
    representations, closed forms for e = 3, 4, 6, 8 and uniform cyclotomy.

  - The construction builders: from_pds_collection(), uniform_classes(),
    uniform_unions(), partition_prediction(), squares_closed_form(),
    subfield_family() and c0e_pds_criterion(), plus structural_checks().

  - Catalog and run_catalog() regenerate the parameter table of the
    cyclotomic partition families for all prime powers up to a bound.

The tool scripts (fieldinfo.py, classify.py, cyclo.py, construct.py,
catalog.py and verifysuite.py) are thin command-line wrappers around these.


Element encodings
=================

An element c_0 + c_1*x + ... + c_(n-1)*x^(n-1) of GF(p^n), written with
respect to the basis of the modulus polynomial, is encoded as the integer
c_0 + c_1*p + ... + c_(n-1)*p^(n-1). 0 and 1 encode the additive and
multiplicative identities. For a prime field, the encoding is the residue
itself.

An element (a_1, ..., a_k) of Z_n1 x ... x Z_nk is encoded as
a_1 + a_2*n1 + a_3*n1*n2 + ...

The modulus of GF(p^n) is the lexicographically smallest monic irreducible
polynomial of degree n over GF(p), comparing coefficients from the constant
term up, and the primitive element is the smallest-encoded element of
multiplicative order q - 1. Labels that depend on the primitive element
(the index i of a class C_i^e, for example) are therefore reproducible, and
classification outcomes do not depend on the choice at all.


Environment variables
=====================

PDF_FIELD_BOUND
  Largest field order make_field() accepts. Defaults to 2**20.

PDF_VERIFY_BOUND
  Largest group order for which construction results are checked against
  the oracle. Defaults to 10**4. Results for larger groups are returned with
  verified=False.
"""
import csv
import io
import itertools
import json
import math
import os
import sys
import threading

import numpy as np
import sympy

# pdfamilies version
VERSION = (1, 0, 0)


#
# File layout:
#
# Public classes
# Exceptions
# Public functions
# Internal functions
# Global constants
#
# Line length: 79 columns
#


#
# Public classes
#


class PrimePowerSpec(object):
    """
    The order q = p^n of a finite field.

    p:
      The characteristic, a prime.

    n:
      The extension degree, n >= 1.

    q:
      p**n.
    """
    __slots__ = (
        "n",
        "p",
        "q",
    )

    def __init__(self, p, n):
        p = int(p)
        n = int(n)
        if not sympy.isprime(p):
            raise NotPrimeError("{} is not a prime".format(p))
        if n < 1:
            raise DegreeZeroError(
                "the extension degree must be at least 1, got {}".format(n))

        self.p = p
        self.n = n
        self.q = p**n

    def __eq__(self, other):
        return isinstance(other, PrimePowerSpec) and \
               (self.p, self.n) == (other.p, other.n)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        return "<PrimePowerSpec {}^{} = {}>".format(self.p, self.n, self.q)


class _AdditiveGroup(object):
    # Mixed-radix additive structure shared by FieldContext and
    # AbelianGroupContext. An encoding is sum(digit_i * weight_i), with
    # 0 <= digit_i < radix_i.

    __slots__ = (
        "_radices",
        "_weights",
        "order",
    )

    def _init_radices(self, radices):
        self._radices = np.array(radices, dtype=np.int64)
        self._weights = np.concatenate(
            ([1], np.cumprod(self._radices)[:-1])).astype(np.int64)
        self.order = int(np.prod(self._radices))

    def digits(self, x):
        """
        Returns the digit vectors of the encoding(s) 'x' as an array with one
        extra trailing axis.
        """
        x = np.asarray(x, dtype=np.int64)
        return (x[..., None] // self._weights) % self._radices

    def pack(self, digits):
        """
        Inverse of digits(). Packs the digit vectors along the last axis
        back into encodings.
        """
        return (np.asarray(digits, dtype=np.int64) * self._weights) \
               .sum(axis=-1)

    def add_arrays(self, x, y):
        """
        Elementwise (broadcasting) sum of the encodings in 'x' and 'y'.
        """
        if len(self._radices) == 1:
            return (np.asarray(x, dtype=np.int64) + y) % self.order
        return self.pack((self.digits(x) + self.digits(y)) % self._radices)

    def sub_arrays(self, x, y):
        """
        Elementwise (broadcasting) difference x - y of the encodings in 'x'
        and 'y'.
        """
        if len(self._radices) == 1:
            return (np.asarray(x, dtype=np.int64) - y) % self.order
        return self.pack((self.digits(x) - self.digits(y)) % self._radices)

    def neg_array(self, x):
        """
        Elementwise additive inverse of the encodings in 'x'.
        """
        return self.sub_arrays(0, x)

    def add(self, x, y):
        self._check_element(x)
        self._check_element(y)
        return int(self.add_arrays(x, y))

    def sub(self, x, y):
        self._check_element(x)
        self._check_element(y)
        return int(self.sub_arrays(x, y))

    def neg(self, x):
        self._check_element(x)
        return int(self.neg_array(x))

    def elements(self):
        """
        Returns all encodings 0, 1, ..., order - 1 as an array.
        """
        return np.arange(self.order, dtype=np.int64)

    def _check_element(self, x):
        if not 0 <= x < self.order:
            raise PDFamilyError(
                "{} is not an element encoding of a group of order {}"
                .format(x, self.order))


class FieldContext(_AdditiveGroup):
    """
    The finite field GF(p^n), with a fixed modulus polynomial, a fixed
    primitive element and full exponent/discrete-log tables. Created with
    make_field(). Instances should be treated as read-only; the tables are
    non-writable numpy arrays.

    spec:
      The PrimePowerSpec (p, n, q) of the field.

    p, n, q:
      Shorthands for spec.p, spec.n and spec.q.

    modulus:
      Coefficients (c_0, c_1, ..., c_(n-1), 1) of the monic irreducible
      modulus polynomial, constant term first.

    alpha:
      Encoding of the primitive element.

    exp_table:
      Array of length q - 1. exp_table[k] is the encoding of alpha^k.

    log_table:
      Array of length q. log_table[x] is the exponent k in [0, q - 2] with
      alpha^k = x, for x != 0. log_table[0] is -1.
    """
    __slots__ = (
        "alpha",
        "exp_table",
        "log_table",
        "modulus",
        "n",
        "p",
        "q",
        "spec",
    )

    def __init__(self, spec, modulus, alpha=None):
        """
        Builds the exponent and discrete-log tables. Use make_field() rather
        than calling this directly.

        spec:
          PrimePowerSpec of the field.

        modulus:
          Coefficients of a monic irreducible polynomial of degree spec.n,
          constant term first.

        alpha (default: None):
          Encoding of the primitive element to use. If None, the
          smallest-encoded primitive element is used. Raises
          NotPrimitiveError if 'alpha' does not have order q - 1.
        """
        self._init_radices((spec.p,)*spec.n)
        self.spec = spec
        self.p = spec.p
        self.n = spec.n
        self.q = spec.q
        self.modulus = tuple(int(c) for c in modulus)

        if alpha is None:
            alpha = self._smallest_primitive()
        elif not (0 < alpha < self.q and self._is_primitive(alpha)):
            raise NotPrimitiveError(
                "{} is not a primitive element of GF({})"
                .format(alpha, self.q))
        self.alpha = int(alpha)

        self.exp_table, self.log_table = self._build_tables()

    def mul(self, x, y):
        """
        Returns the product of the elements 'x' and 'y'.
        """
        self._check_element(x)
        self._check_element(y)
        if not x or not y:
            return 0
        return int(self.exp_table[
            (self.log_table[x] + self.log_table[y]) % (self.q - 1)])

    def inv(self, x):
        """
        Returns the multiplicative inverse of 'x'. Raises
        DivisionByZeroError for x = 0.
        """
        self._check_element(x)
        if not x:
            raise DivisionByZeroError("0 has no inverse in GF({})"
                                      .format(self.q))
        return int(self.exp_table[-self.log_table[x] % (self.q - 1)])

    def pow(self, x, k):
        """
        Returns x^k. Negative exponents are allowed for x != 0.
        """
        self._check_element(x)
        if not x:
            if k < 0:
                raise DivisionByZeroError(
                    "0 raised to the negative power {}".format(k))
            return 0 if k else 1
        return int(self.exp_table[int(self.log_table[x])*k % (self.q - 1)])

    def dlog(self, x):
        """
        Returns the exponent k in [0, q - 2] with alpha^k = x. Raises
        LogOfZeroError for x = 0.
        """
        self._check_element(x)
        if not x:
            raise LogOfZeroError("0 has no discrete logarithm")
        return int(self.log_table[x])

    def mul_arrays(self, x, y):
        """
        Elementwise (broadcasting) product of the encodings in 'x' and 'y'.
        """
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        prod = self.exp_table[
            (self.log_table[x] + self.log_table[y]) % (self.q - 1)]
        return np.where((x == 0) | (y == 0), 0, prod)

    def mul_scalar(self, a, xs):
        """
        Returns the array a*xs for the single element 'a'.
        """
        self._check_element(a)
        return self.mul_arrays(np.full(np.shape(xs), a, dtype=np.int64), xs)

    def subfield(self, r):
        """
        Returns the elements of the subfield GF(p^r) as a sorted array.
        Raises NotASubfieldIndexError unless r divides n.
        """
        if r < 1 or self.n % r:
            raise NotASubfieldIndexError(
                "GF({}^{}) has no subfield GF({}^{})"
                .format(self.p, self.n, self.p, r))
        step = (self.q - 1)//(self.p**r - 1)
        return np.sort(np.concatenate(([0], self.exp_table[::step])))

    def element_str(self, x):
        """
        Returns the element 'x' as a polynomial in x, e.g. "3x^2 + x + 4".
        Elements of prime fields are returned as plain integers.
        """
        self._check_element(x)
        if self.n == 1:
            return str(x)

        terms = []
        for i, c in reversed(list(enumerate(self.digits(x)))):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                terms.append(coef + ("x" if i == 1 else "x^{}".format(i)))
        return " + ".join(terms) or "0"

    @property
    def modulus_str(self):
        """
        The modulus polynomial as a string, e.g. "x^2 + 2x + 2".
        """
        return _poly_str(self.modulus)

    def _mul_matrix(self, a):
        # Matrix of multiplication by 'a' acting on digit (column) vectors

        low = np.array(self.modulus[:-1], dtype=np.int64)
        v = self.digits(a)
        cols = []
        for _ in range(self.n):
            cols.append(v)
            # v*x, reducing x^n = -(c_0 + ... + c_(n-1)*x^(n-1))
            v = (np.concatenate(([0], v[:-1])) - v[-1]*low) % self.p
        return np.stack(cols, axis=1)

    def _is_primitive(self, a):
        identity = np.eye(self.n, dtype=np.int64)
        mat = self._mul_matrix(a)
        for r in sympy.primefactors(self.q - 1):
            if np.array_equal(_matpow(mat, (self.q - 1)//r, self.p),
                              identity):
                return False
        return True

    def _smallest_primitive(self):
        for a in range(1, self.q):
            if self._is_primitive(a):
                return a

        raise InternalError("GF({}) has no primitive element".format(self.q))

    def _build_tables(self):
        # The powers of alpha are generated in blocks: the first block by
        # repeated multiplication, the rest by multiplying the previous block
        # by alpha^size in one matrix product.

        order = self.q - 1
        step = self._mul_matrix(self.alpha)
        size = max(1, math.isqrt(order))

        block = np.empty((size, self.n), dtype=np.int64)
        v = self.digits(1)
        for k in range(size):
            block[k] = v
            v = step @ v % self.p
        jump = self._mul_matrix(int(self.pack(v))).T

        exp_table = np.empty(order, dtype=np.int64)
        for start in range(0, order, size):
            if start:
                block = block @ jump % self.p
            stop = min(start + size, order)
            exp_table[start:stop] = self.pack(block[:stop - start])

        log_table = np.full(self.q, -1, dtype=np.int64)
        log_table[exp_table] = np.arange(order, dtype=np.int64)
        if exp_table[0] != 1 or (log_table[1:] < 0).any():
            raise InternalError("the powers of {} do not cover GF({})*"
                                .format(self.alpha, self.q))

        exp_table.flags.writeable = False
        log_table.flags.writeable = False
        return exp_table, log_table

    def __repr__(self):
        return "<FieldContext GF({}), modulus {}, alpha {}>".format(
            self.q, self.modulus_str, self.element_str(self.alpha))


class AbelianGroupContext(_AdditiveGroup):
    """
    The group Z_n1 x ... x Z_nk, written additively. Created with
    make_group().

    orders:
      The tuple (n1, ..., nk).

    n:
      The order of the group, n1*...*nk.
    """
    __slots__ = (
        "n",
        "orders",
    )

    def __init__(self, orders):
        self.orders = tuple(int(o) for o in orders)
        self._init_radices(self.orders)
        self.n = self.order

    def encode(self, element):
        """
        Returns the encoding of the tuple 'element'.
        """
        if len(element) != len(self.orders) or \
           any(not 0 <= a < o for a, o in zip(element, self.orders)):
            raise PDFamilyError("{} is not an element of {}"
                                .format(element, self))
        return int(self.pack(element))

    def decode(self, x):
        """
        Returns the tuple with encoding 'x'.
        """
        self._check_element(x)
        return tuple(int(d) for d in self.digits(x))

    def __str__(self):
        return " x ".join("Z_{}".format(o) for o in self.orders)

    def __repr__(self):
        return "<AbelianGroupContext {}>".format(self)


class SetFamily(object):
    """
    An ordered collection of pairwise disjoint subsets D_1, ..., D_m of a
    group. This is the object the oracle classifies.

    group:
      The FieldContext or AbelianGroupContext the sets live in.

    sets:
      Tuple of sorted, duplicate-free int64 arrays of element encodings.

    union:
      Sorted array holding S, the union of the sets.
    """
    __slots__ = (
        "group",
        "sets",
        "union",
    )

    def __init__(self, group, sets):
        """
        group:
          FieldContext or AbelianGroupContext.

        sets:
          Iterable of iterables of elements. Elements are encodings, or
          tuples for AbelianGroupContext groups.

        Raises NotDisjointError if two of the sets intersect.
        """
        self.group = group
        self.sets = tuple(_as_subset(group, s) for s in sets)

        union = np.concatenate(self.sets) if self.sets else \
                np.empty(0, dtype=np.int64)
        union.sort()
        if (union[1:] == union[:-1]).any():
            raise NotDisjointError(
                "the sets are not pairwise disjoint (element {} repeats)"
                .format(int(union[1:][union[1:] == union[:-1]][0])))
        self.union = union

    @property
    def m(self):
        """
        The number of sets.
        """
        return len(self.sets)

    @property
    def sizes(self):
        """
        Tuple with the size of each set.
        """
        return tuple(len(s) for s in self.sets)

    @property
    def contains_zero(self):
        """
        True if 0 lies in one of the sets.
        """
        return bool(self.union.size) and self.union[0] == 0

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __repr__(self):
        return "<SetFamily of {} set(s) of sizes {} in a group of order {}>" \
               .format(self.m, self.sizes, self.group.order)


class FrequencyVector(object):
    """
    Exact multiplicity of every group element in a difference multiset.

    counts:
      Non-writable int64 array indexed by element encoding. counts[0] is
      unused (0) for the difference multisets computed here.
    """
    __slots__ = (
        "counts",
    )

    def __init__(self, counts):
        counts = np.asarray(counts, dtype=np.int64)
        counts.flags.writeable = False
        self.counts = counts

    @property
    def total(self):
        """
        The cardinality of the multiset (zero excluded).
        """
        return int(self.counts[1:].sum())

    def support(self):
        """
        Sorted array of the nonzero elements with a nonzero count.
        """
        return np.flatnonzero(self.counts[1:]) + 1

    def as_dict(self):
        """
        Returns a {element: count} dict over the support.
        """
        return {int(x): int(self.counts[x]) for x in self.support()}

    def __getitem__(self, x):
        return int(self.counts[x])

    def __add__(self, other):
        return FrequencyVector(self.counts + other.counts)

    def __eq__(self, other):
        return isinstance(other, FrequencyVector) and \
               np.array_equal(self.counts, other.counts)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return "<FrequencyVector total {} over {} elements>" \
               .format(self.total, len(self.counts))


class FamilyClassification(object):
    """
    The outcome of classifying a set or a family, or a theorem's prediction
    of that outcome.

    kind:
      One of "DS", "PDS", "DDF", "EDF", "SEDF", "PEDF", "DPDF", "EPDF", or
      None when no label applies.

    n:
      The group order.

    m:
      The number of sets (None for single-set kinds).

    k:
      The common set size. A tuple of sizes for relative classifications of
      families with unequal sizes, and a tuple of per-class sizes for PEDF.

    lam, mu:
      The frequencies. For the constant kinds (DS, DDF, EDF, SEDF), mu is
      equal to lam. For PEDF, lam is the tuple of per-size-class
      frequencies and mu is None.

    c:
      PEDF only: tuple with the number of sets of each size.

    relative:
      True for classify_relative() results where T differs from S.

    sedf, pedf:
      External classifications only: the SEDF and PEDF results for the same
      family (FamilyClassification instances with kind None when the test
      fails), or None if not computed.

    params:
      The parameter tuple, e.g. (n, m, k, lam, mu) for DPDF and EPDF,
      (n, k, lam) for DS.

    proper:
      lam != mu for PDS, DPDF and EPDF, None for the other kinds.

    labels:
      The kind plus all weaker labels that hold. A DS is also a PDS, a DDF
      also a DPDF and an EDF also an EPDF.
    """
    __slots__ = (
        "c",
        "k",
        "kind",
        "lam",
        "m",
        "mu",
        "n",
        "pedf",
        "relative",
        "sedf",
    )

    def __init__(self, kind, n, m=None, k=None, lam=None, mu=None, c=None,
                 relative=False):
        if kind not in _KINDS:
            raise PDFamilyError("unknown classification kind {!r}"
                                .format(kind))

        self.kind = kind
        self.n = n
        self.m = m
        self.k = k
        self.lam = lam
        self.mu = lam if kind in _CONSTANT_KINDS else mu
        self.c = c
        self.relative = relative
        self.sedf = None
        self.pedf = None

    @property
    def params(self):
        if self.kind == "DS":
            return (self.n, self.k, self.lam)
        if self.kind == "PDS":
            return (self.n, self.k, self.lam, self.mu)
        if self.kind in ("DDF", "EDF", "SEDF"):
            return (self.n, self.m, self.k, self.lam)
        if self.kind in ("DPDF", "EPDF"):
            return (self.n, self.m, self.k, self.lam, self.mu)
        if self.kind == "PEDF":
            return (self.n, self.m, self.c, self.k, self.lam)
        return tuple(x for x in (self.n, self.m, self.k) if x is not None)

    @property
    def proper(self):
        if self.kind in ("PDS", "DPDF", "EPDF"):
            return self.lam != self.mu
        return None

    @property
    def labels(self):
        return _WEAKER_LABELS.get(self.kind, (self.kind,) if self.kind else ())

    def __eq__(self, other):
        return isinstance(other, FamilyClassification) and \
               (self.kind, self.params, self.relative) == \
               (other.kind, other.params, other.relative)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.params, self.relative))

    def __str__(self):
        if self.kind is None:
            return "none"
        return "({})-{}{}".format(
            ",".join(_param_str(x) for x in self.params),
            self.kind,
            " (relative)" if self.relative else "")

    def __repr__(self):
        return "<FamilyClassification {}>".format(self)


class CyclotomicContext(object):
    """
    A field together with a divisor e of q - 1, e >= 2. Created with
    make_cyclotomic_context().

    The cyclotomic class C_i^e is the coset alpha^i <alpha^e> of the
    subgroup of index e in GF(q)*.

    field:
      The FieldContext.

    e:
      The number of classes.

    f:
      The size of each class, (q - 1)/e.
    """
    __slots__ = (
        "_lock",
        "_matrix",
        "e",
        "f",
        "field",
    )

    def __init__(self, field, e):
        self.field = field
        self.e = e
        self.f = (field.q - 1)//e
        self._matrix = None
        self._lock = threading.Lock()

    def class_index(self, x):
        """
        Returns i such that the nonzero element 'x' lies in C_i^e.
        """
        return self.field.dlog(x) % self.e

    def class_indices(self, xs):
        """
        Vectorized class_index() for an array of nonzero elements.
        """
        xs = np.asarray(xs, dtype=np.int64)
        if (xs == 0).any():
            raise LogOfZeroError("0 lies in no cyclotomic class")
        return self.field.log_table[xs] % self.e

    def cyclotomic_class(self, i):
        """
        Returns C_i^e as the array (alpha^i, alpha^(i+e), ...,
        alpha^(i+(f-1)e)), in that order.
        """
        return self.field.exp_table[
            (i + self.e*np.arange(self.f, dtype=np.int64))
            % (self.field.q - 1)]

    def rho(self, epsilon):
        """
        Returns (q - 1)/epsilon, the size of C_0^epsilon, for epsilon | e.
        """
        if epsilon < 1 or self.e % epsilon:
            raise BadEpsilonError("{} does not divide e = {}"
                                  .format(epsilon, self.e))
        return (self.field.q - 1)//epsilon

    def __repr__(self):
        return "<CyclotomicContext GF({}), e = {}, f = {}>".format(
            self.field.q, self.e, self.f)


class TransversalInfo(object):
    """
    A transversal T_r = (alpha^(re) - 1)C_0^e of Delta(C_0^e), an external
    transversal T_(r,j) = (alpha^(re+j) - 1)C_0^e of Delta(C_j^e, C_0^e), or
    a diagonal D_r = (alpha^(re) - 1)C_0^epsilon.

    r:
      The transversal index.

    kind:
      "internal", "external" or "diagonal".

    j:
      The class offset for external transversals, None otherwise.

    epsilon:
      The coarser class count for diagonals, None otherwise.

    multiplier:
      Encoding of alpha^(re) - 1, or alpha^(re+j) - 1.

    class_index:
      The index i with elements = C_i^e (C_i^epsilon for diagonals).

    elements:
      The set itself, in the order of the underlying class.
    """
    __slots__ = (
        "class_index",
        "elements",
        "epsilon",
        "j",
        "kind",
        "multiplier",
        "r",
    )

    def __init__(self, r, kind, multiplier, class_index, elements, j=None,
                 epsilon=None):
        self.r = r
        self.kind = kind
        self.multiplier = multiplier
        self.class_index = class_index
        self.elements = elements
        self.j = j
        self.epsilon = epsilon

    def __repr__(self):
        extra = ""
        if self.kind == "external":
            extra = ", j = {}".format(self.j)
        elif self.kind == "diagonal":
            extra = ", epsilon = {}".format(self.epsilon)
        return "<TransversalInfo {} r = {}{}, class {}>".format(
            self.kind, self.r, extra, self.class_index)


class PhiProfile(object):
    """
    The phi and psi statistics of C_0^e relative to the coarser classes
    C_i^epsilon, epsilon | e.

    Phi_i is the set of x in C_0^e, x != 1, with x - 1 in
    alpha^i C_0^epsilon. Psi_i is the set of r, 1 <= r < f/2, with
    alpha^(re) in Phi_i.

    epsilon, e, f:
      The class counts and class size of the context.

    phi:
      Tuple (|Phi_0|, ..., |Phi_(epsilon-1)|). Sums to f - 1.

    psi:
      Tuple (|Psi_0|, ..., |Psi_(epsilon-1)|).

    phi_sets:
      Tuple of sorted arrays holding Phi_0, ..., Phi_(epsilon-1).

    central_class:
      For f even, the class index (mod epsilon) of
      alpha^(ef/2) - 1 = -2. None for f odd.
    """
    __slots__ = (
        "central_class",
        "e",
        "epsilon",
        "f",
        "phi",
        "phi_sets",
        "psi",
    )

    def __init__(self, epsilon, e, f, phi, psi, phi_sets, central_class):
        self.epsilon = epsilon
        self.e = e
        self.f = f
        self.phi = phi
        self.psi = psi
        self.phi_sets = phi_sets
        self.central_class = central_class

    @property
    def kappa(self):
        """
        phi_1 - phi_0.
        """
        return self.phi[1] - self.phi[0]

    @property
    def uniform_tail(self):
        """
        True if phi_1 = phi_2 = ... = phi_(epsilon-1).
        """
        return len(set(self.phi[1:])) <= 1

    def __repr__(self):
        return "<PhiProfile epsilon = {}, phi = {}, psi = {}>".format(
            self.epsilon, self.phi, self.psi)


class QuadraticRepresentations(object):
    """
    The representations of q by the quadratic form used by the closed-form
    cyclotomic numbers of order e:

      "e3":  4q = c^2 + 27d^2,  c = 1 mod 3
      "e4":  q = s^2 + t^2,     s = 1 mod 4
      "e6":  q = s^2 + 3t^2,    s = 1 mod 3
      "e8":  q = x^2 + 4y^2,    x = 1 mod 4, and
             q = a^2 + 2b^2,    a = 1 mod 4

    For p in the split case the representation is the proper one (p does
    not divide the first variable). Otherwise the second variable is 0 and
    the first is +-p^(n/2) (2p^(n/2) for e3), normalized by the congruence.

    The sign of the second variable (d, t, y, b) is not determined by the
    form. It is stored as its absolute value, and variants() yields every
    sign assignment.

    q:
      The represented prime power.

    form:
      "e3", "e4", "e6" or "e8".

    candidates:
      List of dicts mapping variable names to values, one per distinct
      representation found. Nearly always a single entry.

    sign_resolved:
      Dict mapping each sign-ambiguous variable to True if its sign is
      known. Only variables that are 0 in every representation start out
      resolved. closed_form_cyclo_numbers() fixes the remaining signs and
      records the outcome as ClosedFormTable.resolved.
    """
    __slots__ = (
        "candidates",
        "form",
        "q",
        "sign_resolved",
    )

    def __init__(self, q, form, candidates, sign_resolved=None):
        self.q = q
        self.form = form
        self.candidates = candidates
        if sign_resolved is None:
            sign_resolved = {name: not any(values[name]
                                           for values in candidates)
                             for name in _SIGNED_VARS[form]}
        self.sign_resolved = sign_resolved

    @property
    def values(self):
        """
        The first representation, as a dict.
        """
        return self.candidates[0]

    def __getitem__(self, name):
        return self.values[name]

    @property
    def ambiguous(self):
        """
        Tuple of the sign-ambiguous variable names with a nonzero value and
        an unresolved sign.
        """
        return tuple(name for name in _SIGNED_VARS[self.form]
                     if self.values[name] and not self.sign_resolved[name])

    def variants(self):
        """
        Yields a dict for every representation and every sign assignment of
        its nonzero sign-ambiguous variables, without repeats.
        """
        for values in self.candidates:
            signed = [name for name in _SIGNED_VARS[self.form]
                      if values[name] and not self.sign_resolved[name]]
            for signs in itertools.product((1, -1), repeat=len(signed)):
                variant = dict(values)
                for name, sign in zip(signed, signs):
                    variant[name] = sign*values[name]
                yield variant

    def resolved(self, values):
        """
        Returns a QuadraticRepresentations holding just the signed
        representation 'values', with every sign marked as resolved.
        """
        return QuadraticRepresentations(
            self.q, self.form, [dict(values)],
            dict.fromkeys(_SIGNED_VARS[self.form], True))

    def __repr__(self):
        return "<QuadraticRepresentations {} of {}: {}>".format(
            self.form, self.q,
            ", ".join("{} = {}{}".format(
                          name, "+-" if name in self.ambiguous else "", val)
                      for name, val in sorted(self.values.items())))


class ClosedFormTable(object):
    """
    Cyclotomic numbers of order e computed from the closed formulas in terms
    of a QuadraticRepresentations instance.

    q, e, f:
      The field order, class count and class size.

    case:
      Description of the formula case used (parity of f, and for e = 6 and
      e = 8 the class of 2).

    values:
      Tuple ((0,0), (1,0), ..., (e-1,0)) for the resolved signs.

    matrix:
      For e = 3, the full 3x3 table as a tuple of rows. None otherwise.

    candidates:
      List of (representation dict, values tuple) pairs, one per
      integral sign assignment.

    representation:
      The representation dict the resolved values come from.

    resolved:
      The same representation as a QuadraticRepresentations with all signs
      resolved.

    resolved_by:
      Tuple of the indices i whose directly counted (i,0) selected the
      candidate. (1,) unless a tie had to be broken.
    """
    __slots__ = (
        "candidates",
        "case",
        "e",
        "f",
        "matrix",
        "q",
        "representation",
        "resolved",
        "resolved_by",
        "values",
    )

    def __init__(self, q, e, case, candidates):
        self.q = q
        self.e = e
        self.f = (q - 1)//e
        self.case = case
        self.candidates = candidates
        self.values = None
        self.matrix = None
        self.representation = None
        self.resolved = None
        self.resolved_by = ()

    def __repr__(self):
        return "<ClosedFormTable q = {}, e = {} ({}): {}>".format(
            self.q, self.e, self.case, self.values)


class UniformParams(object):
    """
    Parameters of a uniform cyclotomy of order e in GF(q'), q' = q^(2*beta)
    with e | q + 1. All cyclotomic numbers take one of three values:

      (0,0) = eta^2 - (e-3)eta - 1
      (0,i) = (i,0) = (i,i) = eta^2 + eta     (i != 0)
      (i,j) = eta^2                           (otherwise)

    where eta = ((-q)^beta - 1)/e.

    q_prime, q, beta, e, eta:
      As above. q is p^s for the smallest s with p^s = -1 mod e.

    table:
      The tuple of the three values above, in that order.

    verified:
      True if the table was checked against direct counts, False if the
      field was too large to check.
    """
    __slots__ = (
        "beta",
        "e",
        "eta",
        "q",
        "q_prime",
        "table",
        "verified",
    )

    def __init__(self, q_prime, q, beta, e, eta):
        self.q_prime = q_prime
        self.q = q
        self.beta = beta
        self.e = e
        self.eta = eta
        self.table = (eta*eta - (e - 3)*eta - 1, eta*eta + eta, eta*eta)
        self.verified = False

    def number(self, i, j):
        """
        Returns the uniform value of (i,j)_e.
        """
        i %= self.e
        j %= self.e
        if i == j == 0:
            return self.table[0]
        if i == 0 or j == 0 or i == j:
            return self.table[1]
        return self.table[2]

    def __repr__(self):
        return "<UniformParams q' = {} = {}^(2*{}), e = {}, eta = {}>".format(
            self.q_prime, self.q, self.beta, self.e, self.eta)


class ConstructionResult(object):
    """
    A family built by one of the construction functions, with the
    classifications the underlying theorem predicts for it.

    family:
      The SetFamily.

    predicted:
      Dict of predicted FamilyClassification instances. The keys present
      depend on the theorem: "internal" and "external" for the family,
      "members" for the (common) classification of each set, and "union"
      for the union of the sets. A key is absent when the theorem predicts
      nothing about it.

    theorem_id:
      Provenance tag, e.g. "pds-collection" or "partition-pds".

    verified:
      True once every prediction was found equal to the oracle's
      classification. False if the group was too large to check.

    notes:
      Dict of construction-specific extra facts (flags and descriptions).
    """
    __slots__ = (
        "family",
        "notes",
        "predicted",
        "theorem_id",
        "verified",
    )

    def __init__(self, family, predicted, theorem_id, notes=None):
        self.family = family
        self.predicted = predicted
        self.theorem_id = theorem_id
        self.verified = False
        self.notes = notes or {}

    def __repr__(self):
        return "<ConstructionResult {}: {}{}>".format(
            self.theorem_id,
            ", ".join("{} {}".format(key, self.predicted[key])
                      for key in _PREDICTION_KEYS if key in self.predicted),
            ", verified" if self.verified else "")


class PartitionPrediction(object):
    """
    Prediction for the family {C_0^e, C_epsilon^e, ..., C_(e-epsilon)^e},
    which partitions C_0^epsilon, when C_0^epsilon is a difference set or a
    proper partial difference set.

    epsilon, e, f:
      The class counts and class size.

    profile:
      The PhiProfile, or None for predictions made from quadratic
      representations alone (squares_closed_form()).

    phi:
      (phi_0, phi_1), the frequencies of Int on and off C_0^epsilon when
      the family is a DPDF.

    kappa:
      phi_1 - phi_0.

    case:
      "DDF+EDF" (difference set case), "DDF+EPDF", "EDF+DPDF",
      "proper-both" or "not-a-DPDF".

    base:
      FamilyClassification of C_0^epsilon (DS or PDS).

    internal, external:
      The predicted FamilyClassification of the family.

    proper_guaranteed:
      For epsilon = 2, True if q = 1 mod 8 and f = 2 mod 4, or f = 3
      mod 4, under which both families are guaranteed proper. None for
      other epsilon.

    theorem_id:
      Provenance tag.

    verified:
      True if the prediction was checked against the oracle (directly, or
      for squares_closed_form() against partition_prediction()).
    """
    __slots__ = (
        "base",
        "case",
        "e",
        "epsilon",
        "external",
        "f",
        "internal",
        "kappa",
        "phi",
        "profile",
        "proper_guaranteed",
        "theorem_id",
        "verified",
    )

    def __init__(self, epsilon, e, f, phi, case, base, internal, external,
                 theorem_id, profile=None):
        self.epsilon = epsilon
        self.e = e
        self.f = f
        self.phi = phi
        self.kappa = phi[1] - phi[0]
        self.case = case
        self.base = base
        self.internal = internal
        self.external = external
        self.theorem_id = theorem_id
        self.profile = profile
        self.verified = False

        self.proper_guaranteed = None
        if epsilon == 2:
            q = e*f + 1
            self.proper_guaranteed = \
                (q % 8 == 1 and f % 4 == 2) or f % 4 == 3

    def __repr__(self):
        return "<PartitionPrediction q = {}, e = {}, epsilon = {}: {}, {} " \
               "and {}>".format(self.e*self.f + 1, self.e, self.epsilon,
                                self.case, self.internal, self.external)


class NonExistence(object):
    """
    Returned by c0e_pds_criterion() when C_0^e is neither a difference set
    nor a partial difference set.

    q, e:
      The field order and class count.

    reason:
      Human-readable reason, e.g. "d != 0".

    kind:
      Always None. Lets callers test the result of c0e_pds_criterion()
      with .kind, the same way as a FamilyClassification.
    """
    __slots__ = (
        "e",
        "q",
        "reason",
    )

    kind = None

    def __init__(self, q, e, reason):
        self.q = q
        self.e = e
        self.reason = reason

    def __str__(self):
        return "not a PDS ({})".format(self.reason)

    def __repr__(self):
        return "<NonExistence q = {}, e = {}: {}>".format(
            self.q, self.e, self.reason)


class StructuralReport(object):
    """
    Result of structural_checks().

    q, e:
      The field order and class count.

    checks:
      List of (name, passed, detail) tuples, one per applicable check.
    """
    __slots__ = (
        "checks",
        "e",
        "q",
    )

    def __init__(self, q, e):
        self.q = q
        self.e = e
        self.checks = []

    def _add(self, name, passed, detail):
        self.checks.append((name, bool(passed), detail))

    @property
    def violations(self):
        """
        The failed checks.
        """
        return [check for check in self.checks if not check[1]]

    @property
    def passed(self):
        return not self.violations

    def __repr__(self):
        return "<StructuralReport q = {}, e = {}: {} check(s), {} " \
               "violation(s)>".format(self.q, self.e, len(self.checks),
                                      len(self.violations))


class CatalogRow(object):
    """
    One row of the partition-family catalog: the internal or the external
    classification of {C_0^e, C_epsilon^e, ..., C_(e-epsilon)^e} in GF(q).

    q, p, n:
      The field order, characteristic and degree.

    e, epsilon, f:
      The class counts and class size.

    family_kind:
      "DDF", "DPDF", "EDF", "EPDF" or "none".

    m, k, lam, mu:
      The family parameters. mu is None for DDF and EDF rows.

    proper:
      lam != mu for DPDF/EPDF rows, None otherwise.

    theorem_id:
      "partition-ds" or "partition-pds".

    verified:
      Always True for emitted rows.
    """
    __slots__ = (
        "e",
        "epsilon",
        "f",
        "family_kind",
        "k",
        "lam",
        "m",
        "mu",
        "n",
        "p",
        "proper",
        "q",
        "theorem_id",
        "verified",
    )

    def __init__(self, q, p, n, e, epsilon, family_kind, m, k, lam, mu,
                 proper, theorem_id, verified):
        self.q = q
        self.p = p
        self.n = n
        self.e = e
        self.epsilon = epsilon
        self.f = (q - 1)//e
        self.family_kind = family_kind
        self.m = m
        self.k = k
        self.lam = lam
        self.mu = mu
        self.proper = proper
        self.theorem_id = theorem_id
        self.verified = verified

    def as_tuple(self):
        """
        The row values in CATALOG_COLUMNS order.
        """
        return (self.q, self.p, self.n, self.e, self.epsilon, self.f,
                self.family_kind, self.m, self.k, self.lam, self.mu,
                self.proper, self.theorem_id, self.verified)

    def as_dict(self):
        """
        The row as a dict keyed by CATALOG_COLUMNS.
        """
        return dict(zip(CATALOG_COLUMNS, self.as_tuple()))

    def __eq__(self, other):
        return isinstance(other, CatalogRow) and \
               self.as_tuple() == other.as_tuple()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "<CatalogRow {}>".format(self.as_tuple())


class Catalog(object):
    """
    Regenerates the table of cyclotomic partition families: for every prime
    power q <= q_max, every epsilon in 'epsilons' dividing q - 1 for which
    C_0^epsilon is a difference set or a proper partial difference set, and
    every e with epsilon | e | q - 1, e > epsilon and (q - 1)/e >= 2, the
    family {C_0^e, C_epsilon^e, ..., C_(e-epsilon)^e} is classified by
    partition_prediction() and checked against the oracle.

    q_max:
      The largest field order.

    epsilons:
      Sorted tuple of the epsilon values, a subset of (2, 3, 4, 6, 8).

    include_negative:
      If True, families that are neither DPDFs nor EPDFs get a row with
      kind "none".

    jobs:
      Number of worker processes. 1 runs everything in-process.

    verify_bound:
      Order bound passed to the oracle checks.

    warn:
      Set this to False to suppress warnings.

    warn_to_stderr:
      Set this to False to not print warnings to stderr. Warnings are still
      collected in 'warnings'.

    warnings:
      List of the warnings generated by run(), each a string prefixed with
      "warning: ".
    """
    __slots__ = (
        "epsilons",
        "include_negative",
        "jobs",
        "q_max",
        "verify_bound",
        "warn",
        "warn_to_stderr",
        "warnings",
    )

    def __init__(self, q_max, epsilons=(2, 3, 4, 6, 8),
                 include_negative=False, jobs=1, verify_bound=None,
                 warn=True, warn_to_stderr=True):
        """
        Raises BoundExceededError if q_max exceeds the verification bound or
        the field bound (every emitted row has to be verified), and
        UnsupportedEError for epsilon values outside (2, 3, 4, 6, 8).
        """
        if verify_bound is None:
            verify_bound = standard_verify_bound()
        bound = min(verify_bound, standard_field_bound())
        if q_max > bound:
            raise BoundExceededError(
                "q_max = {} exceeds the bound {} (see PDF_VERIFY_BOUND and "
                "PDF_FIELD_BOUND)".format(q_max, bound))

        for eps in epsilons:
            if eps not in _CRITERION_E:
                raise UnsupportedEError(
                    "epsilon must be one of {}, got {}"
                    .format(", ".join(map(str, _CRITERION_E)), eps))

        self.q_max = q_max
        self.epsilons = tuple(sorted(set(epsilons)))
        self.include_negative = include_negative
        self.jobs = max(1, jobs)
        self.verify_bound = verify_bound
        self.warn = warn
        self.warn_to_stderr = warn_to_stderr
        self.warnings = []

    def run(self):
        """
        Evaluates all cells and returns the list of CatalogRow instances,
        sorted by (q, epsilon, e) with the internal row before the external
        one. The output does not depend on 'jobs'.

        Raises VerificationError if a prediction disagrees with the oracle.
        """
        tasks = [(q, self.epsilons, self.include_negative, self.verify_bound)
                 for q in prime_powers(self.q_max)]

        if self.jobs > 1:
            import multiprocessing

            with multiprocessing.Pool(self.jobs) as pool:
                results = pool.map(_catalog_cells, tasks)
        else:
            results = list(map(_catalog_cells, tasks))

        rows = []
        for cell_rows, cell_warnings in results:
            rows.extend(cell_rows)
            for msg in cell_warnings:
                self._warn(msg)

        # Stable, so the internal row stays ahead of the external one
        rows.sort(key=lambda row: (row.q, row.epsilon, row.e))
        return rows

    def _warn(self, msg):
        # For printing general warnings

        if not self.warn:
            return

        msg = "warning: " + msg
        self.warnings.append(msg)
        if self.warn_to_stderr:
            sys.stderr.write(msg + "\n")

    def __repr__(self):
        return "<Catalog q <= {}, epsilon in {}{}>".format(
            self.q_max, self.epsilons,
            ", with negative rows" if self.include_negative else "")


#
# Exceptions
#


class PDFamilyError(Exception):
    """
    Exception raised for invalid input and for failed preconditions, e.g. a
    non-prime characteristic, a divisor that does not divide q - 1, or sets
    that are not disjoint. Every error raised by pdfamilies on bad input is
    a subclass of this.
    """


class NotPrimeError(PDFamilyError):
    "The characteristic is not a prime, or q is not a prime power."


class NotPrimitiveError(PDFamilyError):
    "A requested primitive element does not have order q - 1."


class DegreeZeroError(PDFamilyError):
    "The extension degree is smaller than 1."


class BoundExceededError(PDFamilyError):
    "A field or catalog is larger than the configured bound."


class DivisionByZeroError(PDFamilyError, ZeroDivisionError):
    "Inversion of 0 in a field."


class LogOfZeroError(PDFamilyError):
    "Discrete logarithm (or class index) of 0."


class EmptyOrdersError(PDFamilyError):
    "make_group() got no component orders."


class NotDisjointError(PDFamilyError):
    "Two sets that must be disjoint intersect."


class ZeroInSetError(PDFamilyError):
    "A family classified as a DPDF/EPDF has 0 in one of its sets."


class UnequalSizesError(PDFamilyError):
    "A family classified as a DPDF/EPDF has sets of different sizes."


class ZeroInTError(PDFamilyError):
    "The reference set T of a relative classification contains 0."


class BadDivisorError(PDFamilyError):
    "The number of cyclotomic classes e is not a divisor of q - 1 with e >= 2."


class IndexOutOfRangeError(PDFamilyError):
    "A class, transversal or cyclotomic-number index is out of range."


class BadEpsilonError(PDFamilyError):
    "The coarser class count epsilon does not divide e, or is out of range."


class NoRepresentationError(PDFamilyError):
    "q has no representation by the requested quadratic form."


class UnsupportedEError(PDFamilyError):
    "No closed form or criterion is available for this e."


class NotUniformError(PDFamilyError):
    "A uniform-cyclotomy construction was requested for a non-uniform e."


class BadIndexSetError(PDFamilyError):
    "An index set has the wrong size or out-of-range entries."


class OverlappingIndexSetsError(PDFamilyError):
    "The index sets of a union construction intersect."


class ParameterMismatchError(PDFamilyError):
    "The sets of a PDS collection do not share their PDS parameters."


class NotPDSError(PDFamilyError):
    "A set of a PDS collection is not a partial difference set."


class NotASubfieldIndexError(PDFamilyError):
    "r is not a proper divisor of the extension degree."


class ParseError(PDFamilyError):
    "A command-line family or index-set specification is malformed."


class VerificationError(PDFamilyError):
    """
    A prediction disagrees with the oracle. This signals a bug in the
    implementation of a formula, never bad input.
    """


class InternalError(Exception):
    "Exception raised for internal errors."


#
# Public functions
#


def standard_field_bound():
    """
    Helper for reading the largest accepted field order from the
    PDF_FIELD_BOUND environment variable. Returns 2**20 if it is unset.
    """
    return _env_bound("PDF_FIELD_BOUND", 2**20)


def standard_verify_bound():
    """
    Helper for reading the largest group order checked against the oracle
    from the PDF_VERIFY_BOUND environment variable. Returns 10**4 if it is
    unset.
    """
    return _env_bound("PDF_VERIFY_BOUND", 10**4)


# Algebra


def prime_power_spec(q):
    """
    Returns the PrimePowerSpec of the prime power 'q'. Raises NotPrimeError
    if 'q' is not a prime power.
    """
    q = int(q)
    factors = sympy.factorint(q) if q >= 2 else {}
    if len(factors) != 1:
        raise NotPrimeError("{} is not a prime power".format(q))

    (p, n), = factors.items()
    return PrimePowerSpec(p, n)


def prime_powers(bound):
    """
    Returns a sorted list of all prime powers q with 2 <= q <= bound.
    """
    res = []
    for p in sympy.primerange(2, bound + 1):
        q = p
        while q <= bound:
            res.append(q)
            q *= p
    res.sort()
    return res


def make_field(p, n, alpha=None, bound=None):
    """
    Returns a FieldContext for GF(p^n). The modulus is the lexicographically
    smallest monic irreducible polynomial of degree n, comparing coefficients
    from the constant term up, and the primitive element is the
    smallest-encoded element of order p^n - 1 unless 'alpha' is given.

    p:
      The characteristic. NotPrimeError if not a prime.

    n:
      The extension degree. DegreeZeroError if smaller than 1.

    alpha (default: None):
      Encoding of the primitive element to use instead of the smallest one.
      Raises NotPrimitiveError if it is not primitive.

    bound (default: None):
      Largest accepted p^n. If None, standard_field_bound() is used.
      Raises BoundExceededError if p^n is larger.
    """
    spec = PrimePowerSpec(p, n)
    if bound is None:
        bound = standard_field_bound()
    if spec.q > bound:
        raise BoundExceededError(
            "GF({}) is larger than the field bound {} (see PDF_FIELD_BOUND)"
            .format(spec.q, bound))

    return FieldContext(spec, _smallest_irreducible(spec.p, spec.n), alpha)


def field_arith(ctx, op, x, y=None):
    """
    Performs the field operation 'op' on encodings and returns the encoded
    result.

    op:
      One of "add", "sub", "neg", "mul", "inv", "pow" and "dlog". For
      "pow", 'y' is the (integer) exponent. "neg", "inv" and "dlog" ignore
      'y'.

    Raises DivisionByZeroError for "inv" of 0 and LogOfZeroError for "dlog"
    of 0.
    """
    if op in ("neg", "inv", "dlog"):
        return getattr(ctx, op)(x)
    if op in ("add", "sub", "mul", "pow"):
        if y is None:
            raise PDFamilyError("the field operation {} takes two operands"
                                .format(op))
        return getattr(ctx, op)(x, y)

    raise PDFamilyError("unknown field operation {!r}".format(op))


def dlog(ctx, x):
    """
    Returns the exponent k in [0, q - 2] with alpha^k = x. Raises
    LogOfZeroError for x = 0.
    """
    return ctx.dlog(x)


def make_group(orders):
    """
    Returns an AbelianGroupContext for Z_n1 x ... x Z_nk, where 'orders' is
    the sequence (n1, ..., nk). Raises EmptyOrdersError if 'orders' is empty
    and PDFamilyError for orders smaller than 2.
    """
    orders = tuple(orders)
    if not orders:
        raise EmptyOrdersError("a group needs at least one cyclic factor")
    for order in orders:
        if order < 2:
            raise PDFamilyError("cyclic factor of order {} (must be at "
                                "least 2)".format(order))

    return AbelianGroupContext(orders)


def group_add(group, a, b):
    """
    Returns the sum of the tuple elements 'a' and 'b' of 'group' as a tuple.
    """
    return group.decode(group.add(group.encode(a), group.encode(b)))


def group_neg(group, a):
    """
    Returns the additive inverse of the tuple element 'a' as a tuple.
    """
    return group.decode(group.neg(group.encode(a)))


# Difference sets and families


def delta_internal(group, D):
    """
    Returns the FrequencyVector of the multiset Delta(D) = {x - y : x != y
    in D}. Its total is |D|(|D| - 1).
    """
    D = _as_subset(group, D)
    counts = _difference_counts(group, D, D)
    # x - x
    counts[0] -= len(D)
    return FrequencyVector(counts)


def delta_external(group, D1, D2):
    """
    Returns the FrequencyVector of the multiset Delta(D1, D2) = {x - y : x in
    D1, y in D2}. Raises NotDisjointError if D1 and D2 intersect.
    """
    D1 = _as_subset(group, D1)
    D2 = _as_subset(group, D2)
    common = np.intersect1d(D1, D2, assume_unique=True)
    if common.size:
        raise NotDisjointError("{} lies in both sets".format(common[0]))
    return FrequencyVector(_difference_counts(group, D1, D2))


def int_family(fam):
    """
    Returns the FrequencyVector of Int(fam), the union of the Delta(D_i).
    """
    counts = np.zeros(fam.group.order, dtype=np.int64)
    for D in fam.sets:
        counts += delta_internal(fam.group, D).counts
    return FrequencyVector(counts)


def ext_family(fam):
    """
    Returns the FrequencyVector of Ext(fam), the union of the Delta(D_i, D_j)
    over i != j.
    """
    counts = np.zeros(fam.group.order, dtype=np.int64)
    for part in _external_parts(fam):
        counts += part
    return FrequencyVector(counts)


def classify_set(group, D):
    """
    Classifies the nonempty set 'D' as a difference set (kind "DS"), a
    partial difference set (kind "PDS") or neither (kind None).

    A DS has Delta(D) = lam*G*. A PDS has Delta(D) constant lam on D\\{0}
    and constant mu on G*\\D. A set that is a DS is reported as a DS; its
    'labels' include "PDS".
    """
    D = _as_subset(group, D)
    if not D.size:
        raise PDFamilyError("cannot classify the empty set")

    counts = delta_internal(group, D).counts
    res = _classify_counts(counts, _mask(group, D), ("DS", "PDS"),
                           group.order, None, len(D))
    return res


def classify_family(fam, mode):
    """
    Classifies the SetFamily 'fam' from its internal ('mode' "internal") or
    external ('mode' "external") differences.

    Internal mode returns a DDF when Int(fam) = lam*G*, a DPDF when Int(fam)
    is constant lam on S and constant mu on G*\\S (S the union of the sets),
    and kind None otherwise. A one-set family is classified through
    classify_set(), with DS reported as DDF and PDS as DPDF.

    External mode does the same with Ext(fam), returning EDF or EPDF, and
    additionally attaches the classify_sedf() and classify_pedf() results as
    'sedf' and 'pedf'.

    Raises ZeroInSetError if 0 lies in S and UnequalSizesError if the sets
    differ in size.
    """
    if mode not in _MODES:
        raise PDFamilyError("unknown classification mode {!r}".format(mode))
    if not fam.m:
        raise PDFamilyError("cannot classify an empty family")
    if fam.contains_zero:
        raise ZeroInSetError("0 lies in the family; DPDFs and EPDFs live "
                             "in G*")

    n = fam.group.order

    if mode == "internal" and fam.m == 1:
        base = classify_set(fam.group, fam.sets[0])
        return FamilyClassification(_SET_TO_FAMILY[base.kind], n, 1, base.k,
                                    base.lam, base.mu)

    if len(set(fam.sizes)) != 1:
        raise UnequalSizesError("set sizes {} are not all equal"
                                .format(fam.sizes))

    inside = _mask(fam.group, fam.union)
    if mode == "internal":
        return _classify_counts(int_family(fam).counts, inside,
                                ("DDF", "DPDF"), n, fam.m, fam.sizes[0])

    parts = _external_parts(fam)
    res = _classify_counts(sum(parts), inside, ("EDF", "EPDF"), n, fam.m,
                           fam.sizes[0])
    res.sedf = classify_sedf(fam, parts)
    res.pedf = classify_pedf(fam, parts)
    return res


def classify_relative(fam, T, mode):
    """
    Like classify_family(), but tests for constant frequencies on T and on
    G*\\T instead of on S and G*\\S. Set sizes may differ, in which case k
    is the tuple of sizes. 'relative' is set on the result when T differs
    from S.

    Taking T = S gives classify_family()'s answer (kind, parameters), and
    taking T = G* gives the DDF/EDF test.

    Raises ZeroInTError if 0 lies in T, and ZeroInSetError if 0 lies in S.
    """
    if mode not in _MODES:
        raise PDFamilyError("unknown classification mode {!r}".format(mode))
    if not fam.m:
        raise PDFamilyError("cannot classify an empty family")
    if fam.contains_zero:
        raise ZeroInSetError("0 lies in the family")

    T = _as_subset(fam.group, T)
    if T.size and T[0] == 0:
        raise ZeroInTError("the reference set T must lie in G*")

    sizes = fam.sizes
    k = sizes[0] if len(set(sizes)) == 1 else sizes

    if mode == "internal":
        counts = int_family(fam).counts
        kinds = ("DDF", "DPDF")
    else:
        counts = ext_family(fam).counts
        kinds = ("EDF", "EPDF")

    res = _classify_counts(counts, _mask(fam.group, T), kinds,
                           fam.group.order, fam.m, k)
    res.relative = not np.array_equal(T, fam.union)
    return res


def classify_sedf(fam, parts=None):
    """
    Strong external difference family test: for every i, the union of the
    Delta(D_i, D_j) over j != i must be lam*G* for one common lam. Set sizes
    may differ (k is then the tuple of sizes) and 0 may lie in the sets.

    Returns a FamilyClassification of kind "SEDF", or kind None.

    parts (default: None):
      The per-i count arrays, if already computed.
    """
    if parts is None:
        parts = _external_parts(fam)

    sizes = fam.sizes
    k = sizes[0] if len(set(sizes)) == 1 else sizes
    n = fam.group.order

    lams = set()
    for part in parts:
        lam = _constant_value(part[1:])
        if lam is None:
            return FamilyClassification(None, n, fam.m, k)
        lams.add(lam)

    if len(lams) != 1:
        return FamilyClassification(None, n, fam.m, k)
    return FamilyClassification("SEDF", n, fam.m, k, lams.pop())


def classify_pedf(fam, parts=None):
    """
    Partitioned external difference family test. The sets are grouped by
    size, k_1 < ... < k_l, with c_h sets of size k_h. For each h, the union
    over the sets D_i of size k_h and all j != i of Delta(D_i, D_j) must be
    lam_h*G*. 0 may lie in the sets.

    Returns a FamilyClassification of kind "PEDF" with c = (c_1, ..., c_l),
    k = (k_1, ..., k_l) and lam = (lam_1, ..., lam_l), or kind None.

    parts (default: None):
      The per-i count arrays, if already computed.
    """
    if parts is None:
        parts = _external_parts(fam)

    sizes = fam.sizes
    ks = tuple(sorted(set(sizes)))
    n = fam.group.order

    cs = []
    lams = []
    for k in ks:
        members = [part for part, size in zip(parts, sizes) if size == k]
        lam = _constant_value(sum(members)[1:])
        if lam is None:
            return FamilyClassification(None, n, fam.m, ks)
        cs.append(len(members))
        lams.append(lam)

    return FamilyClassification("PEDF", n, fam.m, ks, tuple(lams),
                                c=tuple(cs))


# Cyclotomy


def make_cyclotomic_context(field, e):
    """
    Returns a CyclotomicContext for the classes of order 'e' in 'field'.
    Raises BadDivisorError unless e >= 2 and e divides q - 1. e = q - 1
    (singleton classes) is allowed.
    """
    q = field.q
    if e < 2 or (q - 1) % e:
        raise BadDivisorError(
            "e = {} is not a divisor >= 2 of q - 1 = {}".format(e, q - 1))
    return CyclotomicContext(field, e)


def cyclotomic_matrix(cctx):
    """
    Returns the e x e array of all cyclotomic numbers (i,j)_e, counted
    directly over the field. The array is computed once per context and is
    non-writable.
    """
    with cctx._lock:
        if cctx._matrix is None:
            field = cctx.field
            z = field.exp_table
            succ = field.add_arrays(z, 1)
            keep = succ != 0

            matrix = np.zeros((cctx.e, cctx.e), dtype=np.int64)
            np.add.at(matrix,
                      (field.log_table[z[keep]] % cctx.e,
                       field.log_table[succ[keep]] % cctx.e),
                      1)
            matrix.flags.writeable = False
            cctx._matrix = matrix

        return cctx._matrix


def cyclotomic_number_direct(cctx, i, j):
    """
    Returns the cyclotomic number (i,j)_e, the number of z in C_i^e with
    z + 1 in C_j^e. Raises IndexOutOfRangeError unless 0 <= i, j < e.
    """
    if not (0 <= i < cctx.e and 0 <= j < cctx.e):
        raise IndexOutOfRangeError(
            "({},{}) is not a cyclotomic number index for e = {}"
            .format(i, j, cctx.e))
    return int(cyclotomic_matrix(cctx)[i, j])


def transversal(cctx, r):
    """
    Returns the transversal T_r = (alpha^(re) - 1)C_0^e of Delta(C_0^e) as a
    TransversalInfo. Delta(C_0^e) is the disjoint union of T_1, ...,
    T_(f-1), and T_r is the class C_(a_r)^e with a_r = class_index.

    Raises IndexOutOfRangeError unless 1 <= r <= f - 1.
    """
    if not 1 <= r <= cctx.f - 1:
        raise IndexOutOfRangeError(
            "transversal index r = {} is outside [1, {}]"
            .format(r, cctx.f - 1))

    mult = _power_minus_one(cctx.field, r*cctx.e)
    return TransversalInfo(
        r, "internal", mult, cctx.class_index(mult),
        cctx.field.mul_scalar(mult, cctx.cyclotomic_class(0)))


def external_transversal(cctx, r, j):
    """
    Returns the external transversal T_(r,j) = (alpha^(re+j) - 1)C_0^e of
    Delta(C_j^e, C_0^e). Delta(C_j^e, C_0^e) is the disjoint union of
    T_(1,j), ..., T_(f,j), with r = f standing for the exponent offset j
    alone.

    Raises IndexOutOfRangeError unless 1 <= j <= e - 1 and 1 <= r <= f.
    """
    if not 1 <= j <= cctx.e - 1:
        raise IndexOutOfRangeError(
            "class offset j = {} is outside [1, {}]".format(j, cctx.e - 1))
    if not 1 <= r <= cctx.f:
        raise IndexOutOfRangeError(
            "external transversal index r = {} is outside [1, {}]"
            .format(r, cctx.f))

    mult = _power_minus_one(cctx.field, r*cctx.e + j)
    return TransversalInfo(
        r, "external", mult, cctx.class_index(mult),
        cctx.field.mul_scalar(mult, cctx.cyclotomic_class(0)), j=j)


def diagonal(cctx, epsilon, r):
    """
    Returns the diagonal D_r = (alpha^(re) - 1)C_0^epsilon, the union of the
    alpha^(i*epsilon)T_r. D_r is the class C_i^epsilon with i =
    class_index. For epsilon = e, D_r is T_r.

    Raises BadEpsilonError unless epsilon divides e, and
    IndexOutOfRangeError unless 1 <= r <= f - 1.
    """
    _check_epsilon(cctx, epsilon, 1)
    if not 1 <= r <= cctx.f - 1:
        raise IndexOutOfRangeError(
            "diagonal index r = {} is outside [1, {}]".format(r, cctx.f - 1))

    field = cctx.field
    mult = _power_minus_one(field, r*cctx.e)
    coarse = field.exp_table[::epsilon]
    return TransversalInfo(
        r, "diagonal", mult, field.dlog(mult) % epsilon,
        field.mul_scalar(mult, coarse), epsilon=epsilon)


def phi_profile(cctx, epsilon):
    """
    Returns the PhiProfile of C_0^e relative to the classes of order
    'epsilon'.

    phi_j is counted twice: directly, as the number of x in C_0^e \\ {1}
    with x - 1 in C_j^epsilon, and as the sum of the cyclotomic numbers
    (epsilon*i + j, 0)_e. InternalError is raised if the two disagree.

    Raises BadEpsilonError unless epsilon >= 2 divides e.
    """
    _check_epsilon(cctx, epsilon, 2)

    field = cctx.field
    e = cctx.e
    f = cctx.f

    # alpha^(re) for r = 1, ..., f - 1, in order
    powers = cctx.cyclotomic_class(0)[1:]
    cls = field.log_table[field.sub_arrays(powers, 1)] % epsilon
    phi = np.bincount(cls, minlength=epsilon)

    column = cyclotomic_matrix(cctx)[:, 0]
    phi_sum = column.reshape(e//epsilon, epsilon).sum(axis=0)
    if not np.array_equal(phi, phi_sum):
        raise InternalError(
            "direct phi counts {} differ from cyclotomic-number sums {} for "
            "q = {}, e = {}, epsilon = {}".format(
                phi.tolist(), phi_sum.tolist(), field.q, e, epsilon))

    psi = np.bincount(cls[:(f + 1)//2 - 1], minlength=epsilon)

    central_class = None
    if f % 2 == 0:
        central_class = int(cls[f//2 - 1])

    return PhiProfile(
        epsilon, e, f,
        tuple(int(x) for x in phi),
        tuple(int(x) for x in psi),
        tuple(np.sort(powers[cls == i]) for i in range(epsilon)),
        central_class)


def pairing_relations(profile, q):
    """
    Returns the parity relations between phi and psi that the pairing
    D_(f-r) = +-D_r of the diagonals forces, as a list of (description,
    lhs, rhs) tuples. Every relation holds exactly when lhs == rhs.

    The relations depend on q mod 2*epsilon, the parity of f and, for
    epsilon = 2 and f even, on q mod 8. Except for the phi_0 =
    phi_(epsilon/2) relation (q = epsilon + 1 mod 2*epsilon, epsilon even),
    they are only predicted when phi_1 = ... = phi_(epsilon-1). An empty
    list is returned when nothing is predicted.
    """
    eps = profile.epsilon
    f = profile.f
    phi = profile.phi
    psi = profile.psi
    rho = (q - 1)//eps

    def doubled(extra0, extra1):
        return [("phi_0 = 2 psi_0{}".format(" + 1" if extra0 else ""),
                 phi[0], 2*psi[0] + extra0),
                ("phi_1 = 2 psi_1{}".format(" + 1" if extra1 else ""),
                 phi[1], 2*psi[1] + extra1)]

    if rho % 2 == 0:
        if not profile.uniform_tail:
            return []
        if f % 2:
            return doubled(0, 0)
        if eps > 2 or q % 8 == 1:
            return doubled(1, 0)
        return doubled(0, 1)

    if eps % 2 == 0:
        return [("phi_0 = phi_{}".format(eps//2), phi[0], phi[eps//2])]
    if profile.uniform_tail:
        return doubled(0, 0)
    return []


def minus_one_class(cctx, epsilon):
    """
    Returns the index i with -1 in C_i^epsilon, by discrete logarithm.
    """
    _check_epsilon(cctx, epsilon, 1)
    field = cctx.field
    return field.dlog(field.neg(1)) % epsilon


def predicted_minus_one_class(q, epsilon):
    """
    Returns the class index of -1 among the classes of order 'epsilon'
    predicted from q alone: epsilon/2 if epsilon is even and q = epsilon + 1
    mod 2*epsilon, and 0 otherwise.
    """
    if epsilon % 2 == 0 and ((q - 1)//epsilon) % 2:
        return epsilon//2
    return 0


def cyclotomic_decomposition(field, D):
    """
    Writes the nonzero elements of 'D' as a union of cyclotomic classes,
    using the smallest e >= 2 dividing q - 1 for which that is possible
    (e = q - 1 always is). Returns an (e, indices) tuple with the sorted
    class indices i of the classes C_i^e making up D \\ {0}. Returns None if
    D has no nonzero elements.
    """
    D = _as_subset(field, D)
    D = D[D != 0]
    q = field.q
    if not D.size:
        return None

    logs = field.log_table[D]
    for e in sympy.divisors(q - 1):
        if e < 2:
            continue
        # D is a union of classes of order e iff it is closed under
        # multiplication by alpha^e
        shifted = field.exp_table[(logs + e) % (q - 1)]
        if np.isin(shifted, D).all():
            return e, tuple(int(i) for i in np.unique(logs % e))

    # q = 2: GF(2)* is the single class C_0^1
    return 1, (0,)


def quadratic_representations(spec, form):
    """
    Returns the QuadraticRepresentations of q = spec.q for 'form' ("e3",
    "e4", "e6" or "e8"), found by exhaustive search.

    Raises NoRepresentationError if q is not 1 mod 3, 4, 6 or 8 for the
    respective form, or if no representation exists.
    """
    if form not in _FORMS:
        raise PDFamilyError("unknown quadratic form {!r}".format(form))

    q = spec.q
    p = spec.p
    modulus = _FORMS[form]
    if q % modulus != 1:
        raise NoRepresentationError(
            "the {} representation needs q = 1 mod {}, but q = {}"
            .format(form, modulus, q))

    if form == "e3":
        pairs = _representations(4*q, 27, 3, p, p % 3 == 1)
        candidates = [{"c": c, "d": d} for c, d in pairs]
    elif form == "e4":
        pairs = _representations(q, 1, 4, p, p % 4 == 1)
        candidates = [{"s": s, "t": t} for s, t in pairs]
    elif form == "e6":
        pairs = _representations(q, 3, 3, p, p % 6 == 1)
        candidates = [{"s": s, "t": t} for s, t in pairs]
    else:
        xys = _representations(q, 4, 4, p, p % 4 == 1)
        abs_ = _representations(q, 2, 4, p, p % 8 in (1, 3))
        candidates = [{"x": x, "y": y, "a": a, "b": b}
                      for x, y in xys for a, b in abs_]

    if not candidates:
        raise NoRepresentationError(
            "{} has no {} representation".format(q, form))

    return QuadraticRepresentations(q, form, candidates)


def closed_form_cyclo_numbers(spec, e, field=None):
    """
    Computes the cyclotomic numbers (i,0)_e, 0 <= i < e, from the closed
    formulas for e in (3, 4, 6, 8) and returns a ClosedFormTable. For
    e = 3 the full 3 x 3 table is included.

    Every sign assignment of the sign-ambiguous variables of the
    representation gives a candidate table; non-integral candidates are
    dropped. The remaining candidates are resolved against the directly
    counted (1,0)_e, and ties are broken with (2,0)_e, (3,0)_e, ...,
    (0,0)_e. The case split of the formulas (parity of f, and for e = 6 and
    e = 8 the class of 2) is decided from discrete logarithms.

    field (default: None):
      The FieldContext of GF(q), if already built. It fixes the primitive
      element the class labels refer to.

    Raises UnsupportedEError for e outside (3, 4, 6, 8) and for e = 6 with f
    odd, NoRepresentationError if the representation does not exist, and
    VerificationError if no candidate matches the direct counts.
    """
    if e not in _CLOSED_FORM_E:
        raise UnsupportedEError(
            "closed forms exist for e in {}, not for e = {}"
            .format(_CLOSED_FORM_E, e))

    q = spec.q
    if (q - 1) % e:
        raise NoRepresentationError(
            "e = {} does not divide q - 1 = {}".format(e, q - 1))
    f = (q - 1)//e
    if e == 6 and f % 2:
        raise UnsupportedEError(
            "the e = 6 closed form needs f even (q = {}, f = {})"
            .format(q, f))

    reps = quadratic_representations(spec, "e{}".format(e))
    if field is None:
        field = make_field(spec.p, spec.n)

    case, numerators = _CLOSED_FORMS[e](q, f, field)

    candidates = []
    for values in reps.variants():
        table = _integral(numerators(values))
        if table is not None:
            candidates.append((values, table))

    res = ClosedFormTable(q, e, case, candidates)
    if not candidates:
        raise VerificationError(
            "no integral closed-form table for q = {}, e = {} ({})"
            .format(q, e, case))

    direct = cyclotomic_matrix(make_cyclotomic_context(field, e))[:, 0]

    used = []
    remaining = candidates
    for i in list(range(1, e)) + [0]:
        if len(set(table for _, table in remaining)) <= 1:
            break
        used.append(i)
        remaining = [cand for cand in remaining if cand[1][i] == direct[i]]

    if not remaining or list(remaining[0][1]) != direct.tolist():
        raise VerificationError(
            "closed-form (i,0)_{} for q = {} ({}) match no direct count: "
            "candidates {}, direct {}".format(
                e, q, case, [table for _, table in candidates],
                direct.tolist()))

    values, table = remaining[0]
    res.representation = values
    res.resolved = reps.resolved(values)
    res.values = table
    res.resolved_by = tuple(used) or (1,)
    if e == 3:
        A, B, C = res.values
        D = (q + 1 + values["c"])//9
        res.matrix = ((A, B, C), (B, C, D), (C, D, B))
        full = cyclotomic_matrix(make_cyclotomic_context(field, e))
        if [list(row) for row in res.matrix] != full.tolist():
            raise VerificationError(
                "closed-form 3 x 3 table {} for q = {} differs from the "
                "direct counts {}".format(res.matrix, q, full.tolist()))
    return res


def uniformity(spec, e, verify=True, bound=None):
    """
    Decides whether the cyclotomy of order 'e' in GF(q'), q' = spec.q, is
    uniform, i.e. whether -1 is a power of p modulo e. Returns a
    UniformParams for the minimal q = p^s with e | q + 1, or None if the
    cyclotomy is not uniform.

    verify (default: True):
      If True and q' is at most the verification bound, the three-value
      table is checked against direct counts. VerificationError is raised on
      a mismatch.

    bound (default: None):
      Verification bound. If None, standard_verify_bound() is used.

    Raises BadDivisorError unless e >= 3 divides q' - 1.
    """
    q_prime = spec.q
    if e < 3 or (q_prime - 1) % e:
        raise BadDivisorError(
            "uniform cyclotomy needs e >= 3 dividing q' - 1 = {}, got {}"
            .format(q_prime - 1, e))

    p = spec.p
    s = 1
    power = p % e
    while power != e - 1:
        if power == 1:
            return None
        power = power*p % e
        s += 1

    # The order of p mod e is 2s, and it divides n
    if spec.n % (2*s):
        raise InternalError(
            "2*{} does not divide the degree {} of GF({})"
            .format(s, spec.n, q_prime))
    q = p**s
    beta = spec.n//(2*s)
    eta, rem = divmod((-q)**beta - 1, e)
    if rem:
        raise InternalError("eta is not integral for q' = {}, e = {}"
                            .format(q_prime, e))

    res = UniformParams(q_prime, q, beta, e, eta)

    if bound is None:
        bound = standard_verify_bound()
    if verify and q_prime <= bound:
        cctx = make_cyclotomic_context(make_field(spec.p, spec.n), e)
        matrix = cyclotomic_matrix(cctx)
        for i in range(e):
            for j in range(e):
                if matrix[i, j] != res.number(i, j):
                    raise VerificationError(
                        "uniform ({},{})_{} = {} in GF({}) differs from the "
                        "direct count {}".format(i, j, e, res.number(i, j),
                                                 q_prime, matrix[i, j]))
        res.verified = True

    return res


# Constructions


def from_pds_collection(group, sets, bound=None):
    """
    Builds the family of the pairwise disjoint 'sets', each of which must be
    an (n,k,lam,mu)-PDS (or DS) with common parameters, and returns a
    ConstructionResult predicting an (n,m,k,lam+(m-1)mu,m*mu)-DPDF. If the
    union S is itself a (n,mk,sigma,chi)-PDS or DS, the family is also
    predicted to be an (n,m,k,sigma-(lam+(m-1)mu),chi-m*mu)-EPDF.

    notes["complement"] records which of the sufficient conditions for S to
    be a DS or proper PDS held: "G\\S is a DS", "G\\S is a proper PDS",
    "G*\\S is a proper PDS", or "S classified directly" when none did.

    Raises NotPDSError if a set is not a PDS, ParameterMismatchError if the
    parameters differ, and NotDisjointError/ZeroInSetError for bad sets.
    """
    fam = SetFamily(group, sets)
    if not fam.m:
        raise PDFamilyError("a PDS collection needs at least one set")
    if fam.contains_zero:
        raise ZeroInSetError("0 lies in one of the sets")

    members = []
    for D in fam.sets:
        member = classify_set(group, D)
        if member.kind not in ("DS", "PDS"):
            raise NotPDSError("{} is not a partial difference set"
                              .format(D.tolist()))
        members.append(member)

    params = set((m.k, m.lam, m.mu) for m in members)
    if len(params) != 1:
        raise ParameterMismatchError(
            "the sets have different PDS parameters: {}".format(
                ", ".join(str(m) for m in members)))

    n = group.order
    m = fam.m
    k, lam, mu = params.pop()
    covers = len(fam.union) == n - 1

    predicted = {
        "members": members[0],
        "internal": _predict("internal", n, m, k, lam + (m - 1)*mu, m*mu,
                             covers),
    }

    union = classify_set(group, fam.union)
    if union.kind in ("DS", "PDS"):
        predicted["union"] = union
        predicted["external"] = _predict(
            "external", n, m, k, union.lam - (lam + (m - 1)*mu),
            union.mu - m*mu, covers)

    notes = {"complement": _complement_condition(group, fam.union)}
    return _cross_check(
        ConstructionResult(fam, predicted, "pds-collection", notes), bound)


def uniform_classes(q_prime, e, indices=None, u=None, bound=None):
    """
    Builds the family {C_i^e : i in indices} in GF(q') for a uniform
    cyclotomy of order e, with eta = ((-q)^beta - 1)/e, and predicts:

      members   (q', f, eta^2-(e-3)eta-1, eta^2+eta)-PDS
      internal  (q', u, f, u*eta^2+(u+2-e)eta-1, u(eta^2+eta))-DPDF
      external  (q', u, f, u(u-1)eta^2+2(u-1)eta, u(u-1)eta^2)-EPDF
      union     (q', uf, u^2eta^2+(3u-e)eta-1, u^2eta^2+u*eta)-PDS

    The union is a difference set exactly when eta(2u - e) = 1, recorded in
    notes["union_ds"].

    q_prime:
      The field order, or a FieldContext/PrimePowerSpec.

    indices (default: None):
      The class indices. If None, the lowest 'u' indices are used.

    Raises NotUniformError if the cyclotomy is not uniform and
    BadIndexSetError unless 2 <= u <= e - 1 with distinct indices in range.
    """
    field = _field_for(q_prime)
    params = _uniform_params(field, e)

    indices = _index_set(indices, u, e)
    u = len(indices)
    if not 2 <= u <= e - 1:
        raise BadIndexSetError(
            "uniform_classes needs 2 <= u <= e - 1 = {}, got u = {}"
            .format(e - 1, u))

    cctx = make_cyclotomic_context(field, e)
    n = field.q
    f = cctx.f
    eta = params.eta
    ee = eta*eta

    predicted = {
        "members": _predict_set(n, f, ee - (e - 3)*eta - 1, ee + eta),
        "internal": _predict("internal", n, u, f,
                             u*ee + (u + 2 - e)*eta - 1, u*(ee + eta)),
        "external": _predict("external", n, u, f,
                             u*(u - 1)*ee + 2*(u - 1)*eta, u*(u - 1)*ee),
        "union": _predict_set(n, u*f, u*u*ee + (3*u - e)*eta - 1,
                              u*u*ee + u*eta),
    }
    notes = {
        "eta": eta,
        "indices": indices,
        "union_ds": eta*(2*u - e) == 1,
    }

    fam = SetFamily(field, [cctx.cyclotomic_class(i) for i in indices])
    return _cross_check(
        ConstructionResult(fam, predicted, "uniform-classes", notes), bound)


def uniform_unions(q_prime, e, index_sets, bound=None):
    """
    Builds the family {D_1, ..., D_w} with D_a the union of the classes
    C_i^e, i in I_a, for a uniform cyclotomy of order e. The index sets I_a
    must have a common size u and be pairwise disjoint. Each D_a is a
    (q', uf, lam_U, mu_U)-PDS with lam_U = u^2eta^2+(3u-e)eta-1 and mu_U =
    u^2eta^2+u*eta, and the predictions are:

      internal  (q', w, uf, lam_U+(w-1)mu_U, w*mu_U)-DPDF
      external  (q', w, uf, w(w-1)u^2eta^2+2(w-1)u*eta, w(w-1)u^2eta^2)-EPDF
                (only for w >= 2)

    When the family does not cover GF(q')*, notes["ddf"] tells whether it is
    a DDF (each D_a a DS, eta(2u - e) = 1) and notes["edf_impossible"]
    whether the EDF degeneration is excluded (w >= 2).

    Raises NotUniformError, BadIndexSetError for empty or unequal index sets
    or out-of-range indices, and OverlappingIndexSetsError.
    """
    field = _field_for(q_prime)
    params = _uniform_params(field, e)

    index_sets = [tuple(I) for I in index_sets]
    if not index_sets:
        raise BadIndexSetError("uniform_unions needs at least one index set")
    for I in index_sets:
        if not I or len(set(I)) != len(I) or \
           any(not 0 <= i < e for i in I):
            raise BadIndexSetError(
                "{} is not a set of distinct class indices in [0, {})"
                .format(I, e))
    if len(set(len(I) for I in index_sets)) != 1:
        raise BadIndexSetError("the index sets {} differ in size"
                               .format(index_sets))
    flat = [i for I in index_sets for i in I]
    if len(set(flat)) != len(flat):
        raise OverlappingIndexSetsError(
            "the index sets {} are not pairwise disjoint".format(index_sets))

    cctx = make_cyclotomic_context(field, e)
    n = field.q
    w = len(index_sets)
    u = len(index_sets[0])
    k = u*cctx.f
    eta = params.eta
    ee = eta*eta
    covers = w*u == e

    lam_u = u*u*ee + (3*u - e)*eta - 1
    mu_u = u*u*ee + u*eta

    predicted = {
        "members": _predict_set(n, k, lam_u, mu_u, u == e),
        "internal": _predict("internal", n, w, k, lam_u + (w - 1)*mu_u,
                             w*mu_u, covers),
    }
    if w >= 2:
        predicted["external"] = _predict(
            "external", n, w, k, w*(w - 1)*u*u*ee + 2*(w - 1)*u*eta,
            w*(w - 1)*u*u*ee, covers)

    notes = {
        "eta": eta,
        "ddf": not covers and eta*(2*u - e) == 1,
        "edf_impossible": not covers and w >= 2,
    }

    fam = SetFamily(field, [
        np.concatenate([cctx.cyclotomic_class(i) for i in I])
        for I in index_sets])
    return _cross_check(
        ConstructionResult(fam, predicted, "uniform-unions", notes), bound)


def partition_prediction(q, e, epsilon, bound=None):
    """
    Predicts the classification of the family {C_0^e, C_epsilon^e, ...,
    C_(e-epsilon)^e}, which partitions C_0^epsilon, from the phi profile.

    Returns None when C_0^epsilon (classified by the oracle) is neither a
    difference set nor a proper partial difference set. Otherwise returns a
    (PartitionPrediction, ConstructionResult) tuple:

      - If phi_1, ..., phi_(epsilon-1) are not all equal, the family is
        neither a DPDF nor an EPDF (case "not-a-DPDF").

      - If C_0^epsilon is an (q,rho,lam)-DS, the family is a
        ((f-1)/epsilon)-DDF and a ((e-epsilon)f/epsilon^2)-EDF ("DDF+EDF").

      - If C_0^epsilon is a proper (q,rho,lam,mu)-PDS, with kappa = phi_1 -
        phi_0, the family is a (phi_0, phi_1)-DPDF and a (lam - phi_0,
        mu - phi_1)-EPDF. kappa = 0 gives "DDF+EPDF", kappa = mu - lam gives
        "EDF+DPDF", and any other kappa "proper-both".

    q:
      The field order, or a FieldContext/PrimePowerSpec.

    Raises BadEpsilonError unless 2 <= epsilon < e with epsilon | e, and
    BadDivisorError unless e | q - 1.
    """
    field = _field_for(q)
    if epsilon < 2 or epsilon >= e or e % epsilon:
        raise BadEpsilonError(
            "epsilon must satisfy 2 <= epsilon < e = {} and divide e, got {}"
            .format(e, epsilon))
    cctx = make_cyclotomic_context(field, e)

    n = field.q
    f = cctx.f
    m = e//epsilon

    base = classify_set(field, field.exp_table[::epsilon])
    if base.kind not in ("DS", "PDS"):
        return None

    profile = phi_profile(cctx, epsilon)
    phi = profile.phi[:2]
    theorem_id = "partition-ds" if base.kind == "DS" else "partition-pds"

    if not profile.uniform_tail:
        case = "not-a-DPDF"
        internal = FamilyClassification(None, n, m, f)
        external = FamilyClassification(None, n, m, f)
    else:
        internal = _predict("internal", n, m, f, phi[0], phi[1])
        external = _predict("external", n, m, f, base.lam - phi[0],
                            base.mu - phi[1])
        kappa = phi[1] - phi[0]
        if base.kind == "DS":
            case = "DDF+EDF"
            if kappa:
                raise VerificationError(
                    "C_0^{} is a difference set in GF({}) but phi = {}"
                    .format(epsilon, n, profile.phi))
        elif kappa == 0:
            case = "DDF+EPDF"
        elif kappa == base.mu - base.lam:
            case = "EDF+DPDF"
        else:
            case = "proper-both"

        if case in ("DDF+EDF", "DDF+EPDF") and epsilon*phi[0] != f - 1:
            raise VerificationError(
                "DDF case with phi_0 = {} != (f - 1)/{} in GF({})"
                .format(phi[0], epsilon, n))
        if case in ("DDF+EDF", "EDF+DPDF") and \
           external.lam*epsilon*epsilon != (e - epsilon)*f:
            raise VerificationError(
                "EDF case with lambda = {} != (e - epsilon)f/epsilon^2 in "
                "GF({})".format(external.lam, n))

    pred = PartitionPrediction(epsilon, e, f, phi, case, base, internal,
                               external, theorem_id, profile)

    fam = SetFamily(field, [cctx.cyclotomic_class(epsilon*i)
                            for i in range(m)])
    result = _cross_check(ConstructionResult(
        fam, {"internal": internal, "external": external}, theorem_id,
        {"case": case, "kappa": pred.kappa}), bound)
    pred.verified = result.verified

    return pred, result


def squares_closed_form(q, e, bound=None):
    """
    Predicts the partition of the squares into {C_0^e, C_2^e, ...,
    C_(e-2)^e} purely from quadratic representations of q, without field
    arithmetic, and returns a PartitionPrediction with profile None:

      f = 2       q = 1 mod 8: (1, 0)-DPDF and ((q-9)/4, (q-1)/4)-EPDF;
                  q = 5 mod 8: (0, 1)-DPDF and ((q-5)/4)-EDF
      e = 4       q = s^2 + t^2; f even: ((q-7-2s)/8, (q-3+2s)/8)-DPDF
                  and ((q-3+2s)/8, (q+1-2s)/8)-EPDF, f odd: the same with
                  s replaced by -s
      e = 6       f odd (q = 3 mod 4): ((f-1)/2)-DDF and (f)-EDF;
                  f even, q = s^2 + 3t^2: ((q-9-4s)/12, (q-5+4s)/12)-DPDF
                  and ((q-3+2s)/6, (q+1-2s)/6)-EPDF
      e = 8       q = x^2 + 4y^2 = a^2 + 2b^2: ((q-11-2x-4a)/16,
                  (q-7+2x+4a)/16)-DPDF and ((3q-9+2x+4a)/16,
                  (3q+3-2x-4a)/16)-EPDF

    Parameter pairs with equal entries are reported as DDFs/EDFs. If q is
    within the verification bound, the result is compared against
    partition_prediction() and VerificationError is raised on a mismatch.

    Raises UnsupportedEError unless q is odd and e is in (4, 6, 8) or
    f = 2, BadDivisorError unless e | q - 1, and NoRepresentationError.
    """
    spec = q.spec if isinstance(q, FieldContext) else \
           q if isinstance(q, PrimePowerSpec) else prime_power_spec(q)
    q = spec.q
    if q % 2 == 0:
        raise UnsupportedEError("the squares partition needs q odd")
    if e < 2 or (q - 1) % e or e % 2:
        raise BadDivisorError(
            "e = {} must be an even divisor of q - 1 = {}".format(e, q - 1))

    f = (q - 1)//e
    m = e//2

    if f == 2:
        theorem_id = "squares-f2"
        if q % 8 == 1:
            dpdf = (1, 0)
            epdf = ((q - 9)//4, (q - 1)//4)
        else:
            dpdf = (0, 1)
            epdf = ((q - 5)//4, (q - 5)//4)
    elif e == 4:
        theorem_id = "squares-e4"
        s = quadratic_representations(spec, "e4")["s"]
        if f % 2:
            s = -s
        dpdf = _exact_pair(q - 7 - 2*s, q - 3 + 2*s, 8)
        epdf = _exact_pair(q - 3 + 2*s, q + 1 - 2*s, 8)
    elif e == 6:
        theorem_id = "squares-e6"
        if f % 2:
            dpdf = ((f - 1)//2, (f - 1)//2)
            epdf = (f, f)
        else:
            s = quadratic_representations(spec, "e6")["s"]
            dpdf = _exact_pair(q - 9 - 4*s, q - 5 + 4*s, 12)
            epdf = _exact_pair(q - 3 + 2*s, q + 1 - 2*s, 6)
    elif e == 8:
        theorem_id = "squares-e8"
        reps = quadratic_representations(spec, "e8")
        z = 2*reps["x"] + 4*reps["a"]
        dpdf = _exact_pair(q - 11 - z, q - 7 + z, 16)
        epdf = _exact_pair(3*q - 9 + z, 3*q + 3 - z, 16)
    else:
        raise UnsupportedEError(
            "the squares closed form covers e in (4, 6, 8) and f = 2, not "
            "e = {} with f = {}".format(e, f))

    if q % 4 == 3:
        base = FamilyClassification("DS", q, None, (q - 1)//2, (q - 3)//4)
    else:
        base = FamilyClassification("PDS", q, None, (q - 1)//2, (q - 5)//4,
                                    (q - 1)//4)

    internal = _predict("internal", q, m, f, *dpdf)
    external = _predict("external", q, m, f, *epdf)
    kappa = dpdf[1] - dpdf[0]
    if base.kind == "DS":
        case = "DDF+EDF"
    elif kappa == 0:
        case = "DDF+EPDF"
    elif kappa == base.mu - base.lam:
        case = "EDF+DPDF"
    else:
        case = "proper-both"

    pred = PartitionPrediction(2, e, f, dpdf, case, base, internal, external,
                               theorem_id)

    if bound is None:
        bound = standard_verify_bound()
    if q <= bound:
        oracle, _ = partition_prediction(spec, e, 2, bound)
        if (oracle.internal, oracle.external, oracle.case) != \
           (internal, external, case):
            raise VerificationError(
                "{} for q = {}, e = {}: predicted {} and {} ({}), the phi "
                "profile gives {} and {} ({})".format(
                    theorem_id, q, e, internal, external, case,
                    oracle.internal, oracle.external, oracle.case))
        pred.verified = True

    return pred


def subfield_family(q_prime, r, u, indices=None, bound=None):
    """
    Builds u cosets alpha^i GF(p^r)* of the punctured subfield GF(p^r)* in
    GF(q'), q' = p^n with r | n and r < n. These are the classes C_i^e with
    e = (q' - 1)/(p^r - 1), and the predictions are:

      members   (q', p^r-1, p^r-2, 0)-PDS
      internal  (q', u, p^r-1, p^r-2, 0)-DPDF
      external  (q', u, p^r-1, q'-3p^r+2, q'-p^r)-EPDF   (u = e - 1 only)

    Raises NotASubfieldIndexError unless r is a proper divisor of n, and
    BadIndexSetError unless 2 <= u <= e - 1.
    """
    field = _field_for(q_prime)
    if not 1 <= r < field.n or field.n % r:
        raise NotASubfieldIndexError(
            "r = {} is not a proper divisor of the degree {} of GF({})"
            .format(r, field.n, field.q))

    pr = field.p**r
    e = (field.q - 1)//(pr - 1)
    indices = _index_set(indices, u, e)
    u = len(indices)
    if not 2 <= u <= e - 1:
        raise BadIndexSetError(
            "subfield_family needs 2 <= u <= e - 1 = {}, got u = {}"
            .format(e - 1, u))

    cctx = make_cyclotomic_context(field, e)
    n = field.q

    predicted = {
        "members": _predict_set(n, pr - 1, pr - 2, 0),
        "internal": _predict("internal", n, u, pr - 1, pr - 2, 0),
    }
    if u == e - 1:
        predicted["external"] = _predict("external", n, u, pr - 1,
                                         n - 3*pr + 2, n - pr)

    fam = SetFamily(field, [cctx.cyclotomic_class(i) for i in indices])
    return _cross_check(ConstructionResult(
        fam, predicted, "subfield", {"e": e, "subfield": pr}), bound)


def c0e_pds_criterion(q, e, bound=None):
    """
    Decides from quadratic representations alone whether C_0^e is a
    difference set or a partial difference set, for e in (2, 3, 4, 6, 8):

      e = 2   q = 3 mod 4: ((q-3)/4)-DS; q = 1 mod 4: ((q-5)/4, (q-1)/4)-PDS
      e = 3   PDS iff d = 0: ((q-8+c)/9, (2q-4-c)/18)
      e = 4   PDS iff t = 0: ((q-11-6s)/16, (q-3+2s)/16);
              DS iff s = 1 and t = 2 mod 4: ((q-5)/16)
      e = 6   PDS iff t = 0: ((q-17-20s)/36, (q-5+4s)/36)
      e = 8   PDS iff x = a and y = b = 0: ((q-23-42x)/64, (q-7+6x)/64);
              DS iff x = -3, y = 4 mod 8, a = 1 and b = 2 mod 4: ((q-9)/64)

    When f = 1, C_0^e = {1} is reported as a (q,1,0)-DS for every e.

    Returns a FamilyClassification, or a NonExistence with the reason. The
    answer is compared against classify_set() when q is within the
    verification bound; VerificationError is raised on a mismatch.

    Raises UnsupportedEError for other e and BadDivisorError unless
    e | q - 1.
    """
    field = _field_for(q)
    spec = field.spec
    q = field.q
    if e not in _CRITERION_E:
        raise UnsupportedEError(
            "the C_0^e criterion covers e in {}, not e = {}"
            .format(_CRITERION_E, e))
    cctx = make_cyclotomic_context(field, e)
    f = cctx.f

    res = None
    if f == 1:
        # C_0^e = {1}, the trivial (q,1,0)-DS
        res = _predict_set(q, 1, 0, 0)
    elif e == 2:
        if q % 4 == 3:
            res = _predict_set(q, f, (q - 3)//4, (q - 3)//4)
        else:
            res = _predict_set(q, f, (q - 5)//4, (q - 1)//4)
    elif e == 3:
        rep = quadratic_representations(spec, "e3")
        c, d = rep["c"], rep["d"]
        if d == 0:
            res = _predict_set(q, f, *_exact_pair(2*(q - 8 + c), 2*q - 4 - c,
                                                  18))
        else:
            reason = "d = +-{} != 0".format(d)
    elif e == 4:
        rep = quadratic_representations(spec, "e4")
        s, t = rep["s"], rep["t"]
        if t == 0:
            res = _predict_set(q, f, *_exact_pair(q - 11 - 6*s, q - 3 + 2*s,
                                                  16))
        elif s == 1 and t % 4 == 2:
            res = _predict_set(q, f, *_exact_pair(q - 5, q - 5, 16))
        else:
            reason = "t = +-{} != 0".format(t)
    elif e == 6:
        rep = quadratic_representations(spec, "e6")
        s, t = rep["s"], rep["t"]
        if t == 0:
            res = _predict_set(q, f, *_exact_pair(q - 17 - 20*s, q - 5 + 4*s,
                                                  36))
        else:
            reason = "t = +-{} != 0".format(t)
    else:
        rep = quadratic_representations(spec, "e8")
        x, y, a, b = rep["x"], rep["y"], rep["a"], rep["b"]
        if x == a and y == b == 0:
            res = _predict_set(q, f, *_exact_pair(q - 23 - 42*x, q - 7 + 6*x,
                                                  64))
        elif x == -3 and y % 8 == 4 and a == 1 and b % 4 == 2:
            res = _predict_set(q, f, *_exact_pair(q - 9, q - 9, 64))
        else:
            reason = "not (x = a and y = b = 0): x = {}, y = +-{}, a = {}, " \
                     "b = +-{}".format(x, y, a, b)

    if res is None:
        res = NonExistence(q, e, reason)

    if bound is None:
        bound = standard_verify_bound()
    if q <= bound:
        actual = classify_set(field, cctx.cyclotomic_class(0))
        if actual.kind not in ("DS", "PDS"):
            actual = None
        if (res.kind is None) != (actual is None) or \
           (actual is not None and actual != res):
            raise VerificationError(
                "C_0^{} in GF({}): the criterion gives {}, the oracle {}"
                .format(e, q, res, actual or "neither DS nor PDS"))

    return res


def structural_checks(q, e, bound=None):
    """
    Checks the structural consequences that the theory forces on C_0^e and
    on its partition families, and returns a StructuralReport. A violation
    signals an implementation error.

    For C_0^e itself, when it is a proper PDS:
      - e > f: C_0^e together with 0 is a subfield
      - e < f: it is not a subfield, and mu >= 1
      - e = f: only f = 2 occurs
      - q prime: e > f does not occur
      - f even and e > 2: 2 and -2 lie in C_0^e
      - e even: f is not odd (q != e + 1 mod 2e)
    and, when it is a DS, f is odd.

    For every epsilon | e, 2 <= epsilon < e, whose partition family is a
    DPDF:
      - epsilon > f, or epsilon = f > 2: the DPDF is (f - 1, 0)
      - f even and q = 1 mod 2*epsilon: the DPDF is proper
      - in addition epsilon > 2: 2 and -2 lie in C_0^epsilon
    """
    field = _field_for(q)
    cctx = make_cyclotomic_context(field, e)
    q = field.q
    f = cctx.f
    report = StructuralReport(q, e)

    c0 = cctx.cyclotomic_class(0)
    base = classify_set(field, c0)

    if base.kind == "PDS":
        closed = _is_additively_closed(field, c0)
        if e > f:
            report._add("e > f: C_0^e + {0} is a subfield", closed,
                        "{} is a PDS".format(base))
        elif e < f:
            report._add("e < f: not a subfield and mu >= 1",
                        not closed and base.mu >= 1, str(base))
        else:
            report._add("e = f only for f = 2", f == 2, str(base))
        if field.n == 1:
            report._add("prime field: no proper PDS with e > f", e <= f,
                        str(base))
        if f % 2 == 0 and e > 2:
            report._add("q = 1 mod 2e, e > 2: +-2 in C_0^e",
                        _plus_minus_two_in(cctx, e), str(base))
        if e % 2 == 0:
            report._add("q = e + 1 mod 2e excludes a proper PDS", f % 2 == 0,
                        "f = {}".format(f))
    elif base.kind == "DS":
        report._add("q = 1 mod 2e excludes a difference set", f % 2 == 1,
                    "f = {}".format(f))

    for eps in sympy.divisors(e):
        if not 2 <= eps < e:
            continue
        res = partition_prediction(field, e, eps, bound)
        if res is None or res[0].case == "not-a-DPDF":
            continue
        pred = res[0]
        detail = "epsilon = {}: {}".format(eps, pred.internal)

        if eps > f or eps == f > 2:
            report._add("epsilon >= f: DPDF is (f - 1, 0)",
                        pred.phi == (f - 1, 0), detail)
        if f % 2 == 0 and ((q - 1)//eps) % 2 == 0:
            report._add("f even, q = 1 mod 2 epsilon: DPDF is proper",
                        pred.internal.kind == "DPDF", detail)
            if eps > 2 and pred.internal.kind == "DPDF":
                report._add("epsilon > 2: +-2 in C_0^epsilon",
                            _plus_minus_two_in(cctx, eps), detail)

    return report


# Parsing


def parse_group(text):
    """
    Parses a group specification such as "3x3" or "2x2x4" into an
    AbelianGroupContext. Raises ParseError if 'text' is malformed.
    """
    try:
        orders = [int(part) for part in text.lower().split("x")]
    except ValueError:
        raise ParseError("malformed group specification {!r} (expected e.g. "
                         "'3x3')".format(text))
    return make_group(orders)


def parse_family(text, group):
    """
    Parses a family specification and returns a SetFamily in 'group'. Sets
    are separated by ';' and elements by ','. Elements are encodings, or
    for AbelianGroupContext groups also tuples written with ':', e.g.
    "1:0, 2:0; 0:1, 0:2".

    Raises ParseError if 'text' is malformed and NotDisjointError if the
    sets intersect.
    """
    sets = []
    for part in text.split(";"):
        if not part.strip():
            raise ParseError("empty set in family specification {!r}"
                             .format(text))

        elements = []
        for elm in part.split(","):
            elm = elm.strip()
            try:
                if ":" in elm:
                    if not isinstance(group, AbelianGroupContext):
                        raise ParseError(
                            "tuple element {!r} given for a field".format(elm))
                    elements.append(tuple(int(a) for a in elm.split(":")))
                else:
                    elements.append(int(elm))
            except ValueError:
                raise ParseError("malformed element {!r} in {!r}"
                                 .format(elm, text))

        sets.append([group.encode(elm) if isinstance(elm, tuple) else elm
                     for elm in elements])

    return SetFamily(group, sets)


def parse_index_sets(text):
    """
    Parses index sets such as "0,1;2,3" into a list of tuples. Raises
    ParseError if 'text' is malformed.
    """
    try:
        return [tuple(int(i) for i in part.split(","))
                for part in text.split(";")]
    except ValueError:
        raise ParseError("malformed index sets {!r} (expected e.g. "
                         "'0,1;2,3')".format(text))


# Catalog


def run_catalog(q_max, epsilon_set=(2, 3, 4, 6, 8), output_format="csv",
                include_negative=False, jobs=1, verify_bound=None, warn=True,
                warn_to_stderr=True):
    """
    Runs a Catalog over all prime powers q <= q_max and the epsilon values in
    'epsilon_set', and returns a (rows, text) tuple, with 'text' the rows
    rendered by format_rows() in 'output_format' ("csv" or "json").

    The remaining arguments are passed on to Catalog.
    """
    if output_format not in _OUTPUT_FORMATS:
        raise PDFamilyError("unknown output format {!r} (expected one of {})"
                            .format(output_format, ", ".join(_OUTPUT_FORMATS)))

    rows = Catalog(q_max, epsilon_set, include_negative, jobs, verify_bound,
                   warn, warn_to_stderr).run()
    return rows, format_rows(rows, output_format)


def format_rows(rows, output_format="csv"):
    """
    Renders CatalogRow instances as CSV (header CATALOG_COLUMNS, empty cells
    for missing values, "true"/"false" for flags) or as a JSON list of
    objects keyed by CATALOG_COLUMNS. The output ends in a newline.
    """
    if output_format == "json":
        return json.dumps([row.as_dict() for row in rows], indent=2) + "\n"
    if output_format != "csv":
        raise PDFamilyError("unknown output format {!r}"
                            .format(output_format))

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CATALOG_COLUMNS)
    for row in rows:
        writer.writerow([_csv_value(val) for val in row.as_tuple()])
    return out.getvalue()


def reverify_rows(rows):
    """
    Rebuilds the family of every CatalogRow and classifies it again with the
    oracle. Returns a list of mismatch descriptions (empty if every row
    checks out).
    """
    mismatches = []
    fields = {}
    for row in rows:
        if row.q not in fields:
            fields[row.q] = make_field(row.p, row.n)
        field = fields[row.q]
        cctx = make_cyclotomic_context(field, row.e)
        fam = SetFamily(field, [cctx.cyclotomic_class(row.epsilon*i)
                                for i in range(row.e//row.epsilon)])

        if row.family_kind == "none":
            for mode in _MODES:
                actual = classify_family(fam, mode)
                if actual.kind is not None:
                    mismatches.append(
                        "q = {}, e = {}, epsilon = {}: listed as none, {} "
                        "classification is {}".format(
                            row.q, row.e, row.epsilon, mode, actual))
            continue

        mode = "internal" if row.family_kind in ("DDF", "DPDF") else \
               "external"
        actual = classify_family(fam, mode)
        listed = (row.family_kind, row.m, row.k, row.lam,
                  row.lam if row.mu is None else row.mu)
        if (actual.kind, actual.m, actual.k, actual.lam, actual.mu) != listed:
            mismatches.append(
                "q = {}, e = {}, epsilon = {}: listed as {} {}, the oracle "
                "gives {}".format(row.q, row.e, row.epsilon, row.family_kind,
                                  listed[1:], actual))

    return mismatches


def parse_rows(text):
    """
    Parses CSV text in the format written by format_rows() back into a list
    of CatalogRow instances. Raises ParseError if the header or a value is
    malformed.
    """
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != CATALOG_COLUMNS:
        raise ParseError("expected the header {}, got {}"
                         .format(",".join(CATALOG_COLUMNS), header))

    def opt_int(s):
        return int(s) if s else None

    def opt_bool(s):
        if s not in _BOOL_STRINGS:
            raise ValueError("bad flag {!r}".format(s))
        return _BOOL_STRINGS[s]

    rows = []
    for line_no, fields in enumerate(reader, 2):
        if not fields:
            continue
        if len(fields) != len(CATALOG_COLUMNS):
            raise ParseError("line {}: expected {} fields, got {}".format(
                line_no, len(CATALOG_COLUMNS), len(fields)))
        try:
            q, p, n, e, eps, _ = (int(s) for s in fields[:6])
            rows.append(CatalogRow(
                q, p, n, e, eps, fields[6], opt_int(fields[7]),
                opt_int(fields[8]), opt_int(fields[9]),
                opt_int(fields[10]), opt_bool(fields[11]), fields[12],
                opt_bool(fields[13])))
        except ValueError as ex:
            raise ParseError("line {}: {}".format(line_no, ex))

    return rows


#
# Internal functions
#


def _env_bound(name, default):
    # Reads a positive integer bound from the environment variable 'name'

    value = os.getenv(name)
    if not value:
        return default

    try:
        bound = int(value)
    except ValueError:
        raise PDFamilyError("{}={!r} is not an integer".format(name, value))
    if bound < 2:
        raise PDFamilyError("{}={} must be at least 2".format(name, bound))
    return bound


def _smallest_irreducible(p, n):
    # Lexicographically smallest monic irreducible polynomial of degree n
    # over GF(p), comparing coefficients from the constant term up. Returns
    # the coefficients constant term first, leading 1 included.

    x = sympy.Symbol("x")
    for low in itertools.product(range(p), repeat=n):
        # Divisible by x
        if n > 1 and low[0] == 0:
            continue
        poly = sympy.Poly.from_list([1] + list(low[::-1]), x, modulus=p)
        if poly.is_irreducible:
            return low + (1,)

    raise InternalError("no irreducible polynomial of degree {} over GF({})"
                        .format(n, p))


def _matpow(mat, k, p):
    # mat^k mod p by square-and-multiply

    res = np.eye(len(mat), dtype=np.int64)
    while k:
        if k & 1:
            res = res @ mat % p
        mat = mat @ mat % p
        k >>= 1
    return res


def _poly_str(coefs):
    # Constant-term-first coefficients -> "x^2 + x + 1"

    terms = []
    for i in range(len(coefs) - 1, -1, -1):
        c = coefs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(("" if c == 1 else str(c)) +
                         ("x" if i == 1 else "x^{}".format(i)))
    return " + ".join(terms)


def _param_str(x):
    if isinstance(x, tuple):
        return "(" + ";".join(map(str, x)) + ")"
    return str(x)


def _as_subset(group, elements):
    # Converts 'elements' (encodings, or tuples for AbelianGroupContext) to
    # a sorted, duplicate-free int64 array

    if isinstance(elements, np.ndarray):
        arr = elements.astype(np.int64)
    else:
        items = list(elements)
        if items and isinstance(items[0], tuple):
            items = [group.encode(item) for item in items]
        arr = np.array(items, dtype=np.int64)

    if arr.size and (arr.min() < 0 or arr.max() >= group.order):
        raise PDFamilyError(
            "{} is not an element of a group of order {}".format(
                int(arr.min() if arr.min() < 0 else arr.max()), group.order))
    return np.unique(arr)


def _mask(group, S):
    mask = np.zeros(group.order, dtype=bool)
    mask[S] = True
    return mask


def _difference_counts(group, X, Y):
    # counts[g] = #{(x, y) in X x Y : x - y = g}, accumulated in chunks of
    # rows of X

    counts = np.zeros(group.order, dtype=np.int64)
    if not X.size or not Y.size:
        return counts

    rows = max(1, _DIFF_CHUNK//(len(Y)*len(group._radices)))
    for start in range(0, len(X), rows):
        diffs = group.sub_arrays(X[start:start + rows, None], Y[None, :])
        counts += np.bincount(diffs.ravel(), minlength=group.order)
    return counts


def _external_parts(fam):
    # Count arrays of the union over j != i of Delta(D_i, D_j), for each i

    return [_difference_counts(
                fam.group, D,
                np.setdiff1d(fam.union, D, assume_unique=True))
            for D in fam.sets]


def _constant_value(values):
    # The common value of the nonempty array 'values', or None

    if (values == values[0]).all():
        return int(values[0])
    return None


def _classify_counts(counts, inside, kinds, n, m, k):
    # Constant on G* -> kinds[0]. Constant on 'inside' and constant on the
    # rest of G* -> kinds[1]. Otherwise kind None.

    star = counts[1:]
    lam = _constant_value(star)
    if lam is not None:
        return FamilyClassification(kinds[0], n, m, k, lam)

    ins = inside[1:]
    a = star[ins]
    b = star[~ins]
    if a.size and b.size:
        lam = _constant_value(a)
        mu = _constant_value(b)
        if lam is not None and mu is not None:
            return FamilyClassification(kinds[1], n, m, k, lam, mu)

    return FamilyClassification(None, n, m, k)


def _predict(mode, n, m, k, lam, mu, covers=False):
    # Predicted family classification. Equal frequencies, or a family
    # covering G*, give the constant kind.

    kinds = _MODE_KINDS[mode]
    if covers or lam == mu:
        return FamilyClassification(kinds[0], n, m, k, lam)
    return FamilyClassification(kinds[1], n, m, k, lam, mu)


def _predict_set(n, k, lam, mu, covers=False):
    if covers or lam == mu:
        return FamilyClassification("DS", n, None, k, lam)
    return FamilyClassification("PDS", n, None, k, lam, mu)


def _cross_check(result, bound):
    # Compares every prediction of 'result' with the oracle. Sets
    # result.verified, or raises VerificationError.

    if bound is None:
        bound = standard_verify_bound()
    fam = result.family
    group = fam.group
    if group.order > bound:
        return result

    for key in _PREDICTION_KEYS:
        if key not in result.predicted:
            continue

        pred = result.predicted[key]
        if key == "members":
            actuals = [classify_set(group, D) for D in fam.sets]
        elif key == "union":
            actuals = [classify_set(group, fam.union)]
        else:
            actuals = [classify_family(fam, key)]

        for actual in actuals:
            if actual != pred:
                raise VerificationError(
                    "{}: predicted {} classification {}, the oracle gives {}"
                    .format(result.theorem_id, key, pred, actual))

    result.verified = True
    return result


def _field_for(q):
    # FieldContext for an order, a PrimePowerSpec or a FieldContext

    if isinstance(q, FieldContext):
        return q
    if not isinstance(q, PrimePowerSpec):
        q = prime_power_spec(q)
    return make_field(q.p, q.n)


def _uniform_params(field, e):
    params = uniformity(field.spec, e, verify=False)
    if params is None:
        raise NotUniformError(
            "the cyclotomy of order {} in GF({}) is not uniform (-1 is not a "
            "power of {} mod {})".format(e, field.q, field.p, e))
    return params


def _index_set(indices, u, e):
    if indices is None:
        if u is None:
            raise BadIndexSetError("give either the class indices or u")
        return tuple(range(u))

    indices = tuple(int(i) for i in indices)
    if len(set(indices)) != len(indices) or \
       any(not 0 <= i < e for i in indices):
        raise BadIndexSetError(
            "{} is not a set of distinct class indices in [0, {})"
            .format(indices, e))
    if u is not None and u != len(indices):
        raise BadIndexSetError("u = {} does not match {} indices"
                               .format(u, len(indices)))
    return indices


def _exact_pair(a, b, denominator):
    # (a/denominator, b/denominator), both of which must be integers

    if a % denominator or b % denominator:
        raise VerificationError(
            "parameter formula gives {}/{} and {}/{}, which are not integers"
            .format(a, denominator, b, denominator))
    return a//denominator, b//denominator


def _integral(table):
    # (denominator, numerators) -> tuple of integer values, or None

    denominator, numerators = table
    if any(num % denominator for num in numerators):
        return None
    return tuple(num//denominator for num in numerators)


def _representations(N, coef, modulus, p, split):
    # All (u, v), v >= 0, with u^2 + coef*v^2 = N and u = 1 mod 'modulus'.
    # For 'split', p must not divide u. Otherwise v must be 0.

    res = []
    bound = math.isqrt(N) + 1
    for u in range(-bound, bound + 1):
        if u % modulus != 1:
            continue
        rem = N - u*u
        if rem < 0 or rem % coef:
            continue
        v = math.isqrt(rem//coef)
        if v*v*coef != rem:
            continue
        if (split and u % p) or (not split and not v):
            res.append((u, v))
    return res


def _power_minus_one(field, k):
    # alpha^k - 1

    return field.sub(int(field.exp_table[k % (field.q - 1)]), 1)


def _check_epsilon(cctx, epsilon, lowest):
    if epsilon < lowest or cctx.e % epsilon:
        raise BadEpsilonError(
            "epsilon = {} must be at least {} and divide e = {}"
            .format(epsilon, lowest, cctx.e))


def _complement_condition(group, S):
    # Which sufficient condition on the complement of S holds, if any

    comp = np.setdiff1d(group.elements(), S, assume_unique=True)
    res = classify_set(group, comp)
    if res.kind == "DS":
        return "G\\S is a DS"
    if res.kind == "PDS":
        return "G\\S is a proper PDS"

    comp_star = comp[1:]
    if comp_star.size and classify_set(group, comp_star).kind == "PDS":
        return "G*\\S is a proper PDS"

    return "S classified directly"


def _is_additively_closed(field, S):
    # True if S together with 0 is closed under addition

    S0 = np.concatenate(([0], S))
    return bool(np.isin(field.add_arrays(S0[:, None], S0[None, :]),
                        S0).all())


def _plus_minus_two_in(cctx, epsilon):
    field = cctx.field
    two = field.add(1, 1)
    if not two:
        return False
    return field.dlog(two) % epsilon == 0 and \
           field.dlog(field.neg(two)) % epsilon == 0


def _closed_form_e3(q, f, field):
    def numerators(v):
        c, d = v["c"], v["d"]
        return 18, (2*(q - 8 + c), 2*q - 4 - c - 9*d, 2*q - 4 - c + 9*d)

    return "e = 3", numerators


def _closed_form_e4(q, f, field):
    if f % 2 == 0:
        def numerators(v):
            s, t = v["s"], v["t"]
            return 16, (q - 11 - 6*s, q - 3 + 2*s + 4*t, q - 3 + 2*s,
                        q - 3 + 2*s - 4*t)

        return "f even", numerators

    def numerators(v):
        s = v["s"]
        return 16, (q - 7 + 2*s, q - 3 - 2*s)*2

    return "f odd", numerators


def _closed_form_e6(q, f, field):
    # f is even here. The table depends on the class of 2 mod 3.

    ind = field.dlog(2) % 3

    def numerators(v):
        s, t = v["s"], v["t"]
        a = q - 17
        b = q - 5 + 4*s
        if ind == 0:
            row = (a - 20*s, b + 18*t, b + 6*t, b, b - 6*t, b - 18*t)
        elif ind == 1:
            row = (a - 8*s + 6*t, b + 12*t, b - 6*t, b - 6*t, q - 5 - 8*s,
                   b - 6*t)
        else:
            row = (a - 8*s - 6*t, b + 6*t, q - 5 - 8*s, b + 6*t, b + 6*t,
                   b - 12*t)
        return 36, row

    return "f even, 2 in class {} mod 3".format(ind), numerators


def _closed_form_e8(q, f, field):
    quartic = field.dlog(2) % 4 == 0
    even = f % 2 == 0

    def numerators(v):
        x, y, a, b = v["x"], v["y"], v["a"], v["b"]
        r = q - 7
        if quartic and even:
            row = (q - 23 - 18*x - 24*a,
                   r + 2*x + 4*a + 16*y + 16*b,
                   r + 6*x + 16*y,
                   r + 2*x + 4*a - 16*y + 16*b,
                   r - 2*x + 8*a,
                   r + 2*x + 4*a + 16*y - 16*b,
                   r + 6*x - 16*y,
                   r + 2*x + 4*a - 16*y - 16*b)
        elif quartic:
            row = (q - 15 - 2*x, r + 2*x + 4*a, r - 2*x - 8*a,
                   r + 2*x + 4*a)*2
        elif even:
            odd = r + 2*x + 4*a
            row = (q - 23 + 6*x, odd, r - 2*x - 8*a - 16*y, odd,
                   r - 10*x, odd, r - 2*x - 8*a + 16*y, odd)
        else:
            row = (q - 15 - 10*x - 8*a, r + 2*x + 4*a + 16*y, r + 6*x,
                   r + 2*x + 4*a - 16*y)*2
        return 64, row

    return "2 {}a quartic residue, f {}".format(
        "" if quartic else "not ", "even" if even else "odd"), numerators


def _catalog_cells(task):
    # Evaluates every (epsilon, e) cell of one prime power. Module-level so
    # that it can be sent to worker processes. Returns (rows, warnings).

    q, epsilons, include_negative, verify_bound = task
    spec = prime_power_spec(q)
    field = make_field(spec.p, spec.n)
    divisors = sympy.divisors(q - 1)

    rows = []
    warnings = []
    for eps in epsilons:
        if (q - 1) % eps:
            continue

        crit = c0e_pds_criterion(field, eps, verify_bound)
        if crit.kind is None:
            continue

        es = [e for e in divisors
              if e % eps == 0 and e > eps and (q - 1)//e >= 2]
        if not es:
            warnings.append(
                "C_0^{} is a {} in GF({}), but no e > {} with {} | e and "
                "f >= 2 divides {}".format(eps, crit.kind, q, eps, eps,
                                           q - 1))
            continue

        for e in es:
            res = partition_prediction(field, e, eps, verify_bound)
            if res is None:
                raise VerificationError(
                    "C_0^{} in GF({}) passed the criterion but not the "
                    "oracle".format(eps, q))
            pred, result = res
            if not result.verified:
                raise VerificationError(
                    "q = {}, e = {}, epsilon = {} could not be verified"
                    .format(q, e, eps))

            for desc, lhs, rhs in pairing_relations(pred.profile, q):
                if lhs != rhs:
                    raise VerificationError(
                        "pairing relation {} fails in GF({}) for e = {}, "
                        "epsilon = {}: {} != {}".format(desc, q, e, eps, lhs,
                                                        rhs))

            if pred.case == "not-a-DPDF":
                if include_negative:
                    rows.append(CatalogRow(
                        q, spec.p, spec.n, e, eps, "none", e//eps, pred.f,
                        None, None, None, pred.theorem_id, True))
                continue

            for cls in pred.internal, pred.external:
                two_valued = cls.kind in ("DPDF", "EPDF")
                rows.append(CatalogRow(
                    q, spec.p, spec.n, e, eps, cls.kind, cls.m, cls.k,
                    cls.lam, cls.mu if two_valued else None, cls.proper,
                    pred.theorem_id, True))

    return rows, warnings


def _csv_value(val):
    if val is None:
        return ""
    if isinstance(val, bool):
        return "true" if val else "false"
    return val


#
# Global constants
#

# Column names of catalog rows, in CSV order
CATALOG_COLUMNS = (
    "q",
    "p",
    "n",
    "e",
    "epsilon",
    "f",
    "kind",
    "m",
    "k",
    "lambda",
    "mu",
    "proper",
    "theorem",
    "verified",
)

# Every classification kind. None means no label applies.
_KINDS = (
    "DS",
    "PDS",
    "DDF",
    "EDF",
    "SEDF",
    "PEDF",
    "DPDF",
    "EPDF",
    None,
)

# Kinds with a single frequency
_CONSTANT_KINDS = frozenset({"DS", "DDF", "EDF", "SEDF"})

_WEAKER_LABELS = {
    "DS": ("DS", "PDS"),
    "DDF": ("DDF", "DPDF"),
    "EDF": ("EDF", "EPDF"),
}

_SET_TO_FAMILY = {
    "DS": "DDF",
    "PDS": "DPDF",
    None: None,
}

_MODES = ("internal", "external")

_MODE_KINDS = {
    "internal": ("DDF", "DPDF"),
    "external": ("EDF", "EPDF"),
}

# Checked by _cross_check(), in this order
_PREDICTION_KEYS = ("members", "union", "internal", "external")

# Quadratic form -> the modulus q must be 1 modulo
_FORMS = {
    "e3": 3,
    "e4": 4,
    "e6": 6,
    "e8": 8,
}

# Sign-ambiguous variables of each form
_SIGNED_VARS = {
    "e3": ("d",),
    "e4": ("t",),
    "e6": ("t",),
    "e8": ("y", "b"),
}

_CLOSED_FORMS = {
    3: _closed_form_e3,
    4: _closed_form_e4,
    6: _closed_form_e6,
    8: _closed_form_e8,
}

_CLOSED_FORM_E = (3, 4, 6, 8)

_CRITERION_E = (2, 3, 4, 6, 8)

_OUTPUT_FORMATS = ("csv", "json")

_BOOL_STRINGS = {
    "": None,
    "false": False,
    "true": True,
}

# Number of differences materialized at once by _difference_counts()
_DIFF_CHUNK = 1 << 22
