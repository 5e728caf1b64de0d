"""Exact connection probabilities for triple dimers on circular planar bipartite graphs.

Modules: ``linalg`` (exact rationals), ``graph`` (circular planar graphs and their
file format), ``kasteleyn`` (signs and the boundary measurement matrix X),
``partitions`` and ``webs`` (3-partitions, webs and traces), ``skein`` (reduction
to reduced webs), ``probability`` (P_lambda, Z(c), Pr_c and closed forms),
``oracle`` (brute-force multiweb enumeration and sampling), ``scaling``
(half-plane limits) and ``cli``.
"""

__version__ = "0.1.0"
