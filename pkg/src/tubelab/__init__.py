"""tubelab: certified tube-class lattices for Lefschetz pencils on plane curves.

The pipeline computes permutation monodromy of a pencil of lines numerically
and everything downstream (branched-cover homology, tube classes, lattice
index) in exact integer arithmetic, certifying that the tube image lattice
is a uniform integer multiple of the full first homology lattice.
"""

__version__ = "0.1.0"
