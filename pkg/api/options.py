import functools

import click
from flask import current_app

from model.errors import EmdError


def fail(message, code=2):
    """Writes the error payload to stderr and leaves with `code`."""
    payload = {
        "message": message,
        "data": None,
        "error": "Bad request"
    }
    click.echo(current_app.json.dumps(payload), err=True)
    click.get_current_context().exit(code)


def envelope_command(exit_code=None):
    '''
    This decorator turns a function returning an OutputEnvelope into a command body.
    Here is how it works:
      1. adds the common --format, --output and --digits options
      2. resolves --digits against the FLOAT_DIGITS default
      3. calls the decorated function with the remaining options and digits
      4. writes the envelope as JSON or CSV to the output
      5. exits with exit_code(envelope) when a callable is given, 0 otherwise
    Here are the possible error responses:
      A. exit 2 / Bad request: the computation rejected its arguments (EmdError)
      B. exit 2: click usage errors (unknown flag, bad choice, out of range)
    '''
    def decorator(func_to_wrap):
        @click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default='json', show_default=True,
                      help='Output encoding.')
        @click.option('--output', type=click.File('w'), default='-', help='Output path, stdout by default.')
        @click.option('--digits', type=click.IntRange(1, 17), default=None,
                      help='Significant digits for floats.')
        @functools.wraps(func_to_wrap)
        def decorated(fmt, output, digits, **kwargs):
            digits = digits or current_app.config['FLOAT_DIGITS']
            try:
                envelope = func_to_wrap(digits=digits, **kwargs)
            except EmdError as e:
                current_app.logger.info("%s rejected: %s", func_to_wrap.__name__, e)
                fail(str(e))
            output.write(envelope.to_json() if fmt == 'json' else envelope.to_csv(digits))
            current_app.logger.info("%s written as %s", envelope.command, fmt)
            code = exit_code(envelope) if exit_code else 0
            if code:
                click.get_current_context().exit(code)

        return decorated

    return decorator
