class DecompositionError(Exception):
    pass
