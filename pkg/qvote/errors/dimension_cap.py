class DimensionCapError(Exception):
    def __init__(self, dim: int, max_dim: int):
        super().__init__('Matrix dimension %d exceeds the configured maximum of %d.\n'
                         'Use smaller block sizes or raise the limit with the "--max-dimension" option.'
                         % (dim, max_dim))
        self.dim = dim
        self.max_dim = max_dim
