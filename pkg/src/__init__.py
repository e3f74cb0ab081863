"""
m-closed graph toolkit

Reduced Gröbner bases of binomial edge ideals from admissible paths,
closure numbers of graphs, constructive labelings of caterpillar trees,
minimal prime components, and a verification suite that checks the
underlying theorems on small corpora against independent oracles.

Main modules:
- graph_core: graph substrate, labelings, distances, G* transform
- admissible_groebner: admissible paths and the basis they produce
- closedness: closed, weakly closed, m-closed and 3-closed-tree decisions
- caterpillar_labeling: sweep and alg1 labelings, bridge and three-piece gluing
- prime_decomposition: minimal primes P_S(G) and Krull dimension
- betti_oracle: β_{1,3} counts for the basis size identities
- buchberger_oracle: exact Buchberger completion used as a cross-check
- verification: the named checks behind `main.py verify`
"""

__version__ = "0.3.0"
