# Lattice points on cusp quadrics, class numbers and closed orbit formulas
