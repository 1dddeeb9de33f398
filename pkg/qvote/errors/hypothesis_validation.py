class HypothesisValidationError(ValueError):
    def __init__(self, report):
        super().__init__('Invalid hypothesis set:\n' + str(report))
        self.report = report
