class NotAMinimum(UserWarning):
    pass
