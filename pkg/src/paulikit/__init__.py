"""paulikit: builds the order-16 Pauli group several independent ways and
machine-checks that the routes agree.

Subpackages by task:

* :mod:`paulikit.scalars`, :mod:`paulikit.matrix2`, :mod:`paulikit.quaternion`
  -- exact Gaussian-rational and floating 2x2/quaternion arithmetic;
* :mod:`paulikit.groups` -- Cayley-table groups, products, quotients,
  isomorphism search;
* :mod:`paulikit.presentations`, :mod:`paulikit.coset_enumeration` -- words,
  presentations, amalgamated/central-product recipes, Todd-Coxeter;
* :mod:`paulikit.catalog` -- the bundled group zoo and exact generator
  matrices;
* :mod:`paulikit.sphere` -- the free actions of the quaternion group and Z4
  on the 3-sphere;
* :mod:`paulikit.pseudofermions` -- the damped two-level-atom operator model
  realizing the same group;
* :mod:`paulikit.reports`, :mod:`paulikit.cli` -- verification suites and the
  command-line front end.
"""

__version__ = "0.1.0"
