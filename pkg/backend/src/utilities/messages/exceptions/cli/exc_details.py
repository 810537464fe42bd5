import click

INPUT_ERROR_EXIT_CODE = 2
CHECK_FAILED_EXIT_CODE = 1


class InputError(click.ClickException):
    """
    A bad problem file, a bad option value or an input rejected by the toolkit; exits with status 2.
    """

    exit_code = INPUT_ERROR_EXIT_CODE

    def __init__(self, message: str):
        super().__init__(message)
