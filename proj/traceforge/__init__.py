"""Exact trace-field computations for gluings of arithmetic pieces.

Thin Python wrapper over the C++ core. All structured arguments and results
are plain dicts/lists mirroring the CLI's JSON wire formats; scalars are
exact "p/q" strings (or {"x": ..., "y": ...} over real quadratic fields).
"""

import json as _json

from . import _traceforge as _core

__all__ = [
    "invariants",
    "equivalent",
    "similar",
    "trace_field",
    "verify_certificate",
    "search_blocks",
    "table1",
    "build_odd_twist",
    "build_quad_twist",
    "example_ex45",
    "example_ex46",
    "delta5",
]


def invariants(form):
    """Hasse profile (rank, signature, discriminant, bad places) of a form over Q."""
    return _json.loads(_core.invariants(_json.dumps(form)))


def equivalent(f, g):
    """Hasse-Minkowski equivalence of two diagonal forms over Q."""
    return _json.loads(_core.equivalent(_json.dumps(f), _json.dumps(g)))


def similar(f, g):
    """Similarity f = lambda * g over Q; includes the scalar when found."""
    return _json.loads(_core.similar(_json.dumps(f), _json.dumps(g)))


def trace_field(plan):
    """Trace field, degree and arithmeticity verdict of a gluing plan."""
    return _json.loads(_core.trace_field(_json.dumps(plan)))


def verify_certificate(certificate):
    """Check a closing-up certificate {f0, a, A0}; returns per-condition results."""
    return _json.loads(_core.verify_certificate(_json.dumps(certificate)))


def search_blocks(d, coeff_bound=3, entry_bound=3):
    """Exhaustive search for 2x2 blocks (q, A) with q.A = d q and A^2 = d I."""
    return _json.loads(_core.search_blocks(d, coeff_bound, entry_bound))


def table1():
    """Reproduce the published 10-row table of block certificates."""
    return _json.loads(_core.table1())


def build_odd_twist(d, n):
    """Closed-form certificate realizing Q(sqrt d) for odd squarefree d, even n >= 4."""
    return _json.loads(_core.build_odd_twist(d, n))


def build_quad_twist(m, bx, by, n):
    """Certificate over Q(sqrt m) for b = bx + by*sqrt(m), scaled to admissibility."""
    return _json.loads(_core.build_quad_twist(m, str(bx), str(by), n))


def example_ex45(r, n):
    """Canonical gluings over Q: pieces {1, p_1..p_r}, primes = 1 (mod 4)."""
    return _json.loads(_core.example_ex45(r, n))


def example_ex46(r, n, norm_bound=500):
    """Canonical gluings over Q(sqrt 2) through split primes."""
    return _json.loads(_core.example_ex46(r, n, norm_bound))


def delta5():
    """The dimension-5 obstruction pipeline."""
    return _json.loads(_core.delta5())
