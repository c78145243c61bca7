"""Search stages: pseudo reduction, local search, genetic evolution, postprocessing."""
