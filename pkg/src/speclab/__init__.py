"""speclab: sharp comparison constants for Neumann eigenvalues of nested convex domains.

The package computes the closed-form bounds governing how far domain
monotonicity of Neumann Laplacian eigenvalues can fail on convex domains,
and verifies them at desk scale with analytic spectra and a piecewise-linear
finite element eigensolver on the extremal domain families (degenerating
rhombi, sectors, constant-width shapes, rectangles).

Modules
-------
specfun     Bessel functions of the first kind, their zeros and derivative zeros.
constants   Closed-form bound evaluators indexed by eigenvalue order and dimension.
spectra     Exact eigenvalue sequences for segments, boxes, products, unions, disks.
geometry    Parametric convex planar domains, measures, inclusion pairs, meshing.
fem         P1 finite element eigensolver with Richardson extrapolation.
experiments Reproducible command-line experiments emitting CSV/JSON/SVG.
"""

__version__ = "0.1.0"
