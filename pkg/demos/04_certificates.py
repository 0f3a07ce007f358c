"""Primitivity certificates for the catalog lattices.

Run from the repository root:  python3 demos/04_certificates.py
"""
from hkdyn import Isometry, Lattice, catalog, classify, primitivity_certificate
from hkdyn.exact import IntMatrix

for name, n in (("K3", None), ("K3n", 2), ("Kummer", 2)):
    lat = catalog(name, n)
    print(f"{lat.label:10s} rank {lat.rank:2d}  signature {tuple(lat.signature())}  "
          f"Fujiki constant {lat.fujiki_constant}")

# %% the Pell isometry as a model of the action on H^(1,1) of a
# four-dimensional manifold with b2 = 23 (K3[2] type)
pell = classify(Isometry(Lattice(IntMatrix([[1, 0], [0, -2]])), IntMatrix([[3, 4], [2, 3]])))
cert = primitivity_certificate(pell, n=2, b2=catalog("K3n", 2).rank)
print(cert.verdict.value, "-", cert.justification.value)
print("periodic hypersurfaces at most", cert.max_periodic_hypersurfaces)
print("base dimension of any invariant fibration >=", cert.base_dim_lower_bound)
for note in cert.notes:
    print("  note:", note)

# a finite-order map gives no conclusion
swap = classify(Isometry(catalog("U"), IntMatrix([[0, 1], [1, 0]])))
print(primitivity_certificate(swap, 2, 23).verdict.value)
