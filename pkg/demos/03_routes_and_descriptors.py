"""
Several routes to the same genus
================================

Chern numbers, Hodge numbers, orbit counts and classical invariants all
determine chi_y. The catalog checks them against each other.
"""

import json

from chiygenus.varieties import (
    K3_DIAMOND,
    Invariants,
    catalog,
    chi_y,
    chi_y_curve_surface_product,
    chi_y_from_hodge,
    chi_y_routes,
    chi_y_toric,
    parse_descriptor,
)

print("K3 by Hodge numbers:", chi_y_from_hodge(K3_DIAMOND))
print("K3 by (chi_a, e, sigma):", chi_y(Invariants(2, 2, 24, -16)))

# P^2 has 3 fixed points, 3 invariant lines and one open torus
print("P2 from orbit counts:", chi_y_toric([3, 3, 1]))

# a genus-2 curve times a K3 surface
print("C2 x K3:", chi_y_curve_surface_product([(-1, -2)], [(2, 24, -16)]))

for name in ("p3", "quartic_surface", "p1xp2"):
    routes = chi_y_routes(catalog()[name])
    print(name, {k: str(v) for k, v in routes.items()})

# descriptors are plain JSON
d = parse_descriptor(json.dumps({"kind": "complete_intersection", "ambient_dim": 4, "degrees": [2, 3]}))
print("(2,3) complete intersection in P4:", chi_y(d))
