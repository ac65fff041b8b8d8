"""Pure hyperbolic geometry: Möbius algebra, hyperboloid model, predicates and hull."""
