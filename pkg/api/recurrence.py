import click
from flask import Blueprint

from api.options import envelope_command
from model.bourn_recurrence import build_grid
from model.envelope import OutputEnvelope, exact_str, round_sig

recurrence_api = Blueprint('recurrence_api', __name__, cli_group=None)


@recurrence_api.cli.command('recurrence')
@click.option('--p-max', type=int, default=6, show_default=True)
@click.option('--q-max', type=int, default=6, show_default=True)
@click.option('--show', type=click.Choice(['M', 'L']), default='L', show_default=True)
@envelope_command()
def recurrence(p_max, q_max, show, digits):
    """Prints the M or L grid on 0..p_max x 0..q_max, boundary included."""
    grid = build_grid(p_max, q_max)
    envelope = OutputEnvelope(command='recurrence',
                              parameters={'p_max': p_max, 'q_max': q_max, 'show': show, 'digits': digits})
    for p, row in enumerate(grid.matrix(show)):
        if show == 'L':
            envelope.exact_values.append({'p': p, **{f"q{q}": value for q, value in enumerate(row)}})
        else:
            envelope.exact_values.append({'p': p, **{f"q{q}": exact_str(value) for q, value in enumerate(row)}})
            envelope.float_values.append({'p': p, **{f"q{q}": round_sig(value, digits)
                                                     for q, value in enumerate(row)}})
    envelope.results['diagonal'] = [exact_str(m) for m in grid.diagonal('M')]
    return envelope
