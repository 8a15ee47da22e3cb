# Spectral radius bounds for nonnegative matrices and graphs
