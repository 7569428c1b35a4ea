"""Parameters of a run: the surface family, the chart window and the solvers."""
