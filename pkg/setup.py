import io
import os

import setuptools


setuptools.setup(
    name="pdfamilies",
    # MAJOR.MINOR.PATCH, per http://semver.org
    version="1.0.0",
    description="Disjoint and external partial difference families over "
                "finite fields and abelian groups",

    # Make sure that README.rst decodes in environments that use the C
    # locale (which implies ASCII), by explicitly giving the encoding
    long_description=io.open(
        os.path.join(os.path.dirname(__file__), "README.rst"),
        encoding="utf-8"
    ).read(),

    keywords="difference sets, partial difference sets, cyclotomy, "
             "finite fields, combinatorial designs",
    license="ISC",

    py_modules=(
        "pdfamilies",
        "fieldinfo",
        "classify",
        "cyclo",
        "construct",
        "catalog",
        "verifysuite",
    ),

    entry_points={
        "console_scripts": (
            "pdf-field-info = fieldinfo:main",
            "pdf-classify = classify:main",
            "pdf-cyclo = cyclo:main",
            "pdf-construct = construct:main",
            "pdf-catalog = catalog:main",
            "pdf-verify-suite = verifysuite:main",
        )
    },

    # Dense frequency arrays and exp/log tables (numpy), primality,
    # factorization, divisors and irreducibility tests (sympy)
    install_requires=(
        "numpy",
        "sympy",
    ),

    # math.isqrt()
    python_requires=">=3.8",

    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: ISC License (ISCL)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: Implementation :: CPython",
    ]
)
