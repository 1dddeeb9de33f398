class IncompatibleMethodError(ValueError):
    def __init__(self, method: str, reason: str):
        super().__init__('The "%s" evaluation method cannot be used: %s' % (method, reason))
        self.method = method
