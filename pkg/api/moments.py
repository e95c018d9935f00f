from fractions import Fraction

import click
from flask import Blueprint, current_app

from api.options import envelope_command
from model.envelope import OutputEnvelope, exact_str, round_sig
from model.moment_engine import density, density_diagnostics, moment_table
from model.simplex_mc import estimate_moments

moments_api = Blueprint('moments_api', __name__, cli_group=None)

EXACT_FIELDS = ('first_moment', 'second_moment', 'variance',
                'normalized_first', 'normalized_second', 'normalized_variance')
FLOAT_FIELDS = EXACT_FIELDS + ('asymptotic_first', 'asymptotic_variance',
                               'asymptotic_normalized_first', 'asymptotic_normalized_variance')


@moments_api.cli.command('moments')
@click.option('--n-min', type=int, default=2, show_default=True)
@click.option('--n-max', type=int, default=10, show_default=True)
@envelope_command()
def moments(n_min, n_max, digits):
    """Exact and float E(X_n), E(X_n^2), Var(X_n) and their unit normalized versions."""
    rows = moment_table(n_min, n_max)
    envelope = OutputEnvelope(command='moments', parameters={'n_min': n_min, 'n_max': n_max, 'digits': digits})
    for row in rows:
        envelope.exact_values.append({'n': row.n, **{f: exact_str(getattr(row, f)) for f in EXACT_FIELDS}})
        envelope.float_values.append({'n': row.n, **{f: round_sig(getattr(row, f), digits) for f in FLOAT_FIELDS}})
    envelope.results['rows'] = len(rows)
    return envelope


@moments_api.cli.command('density')
@click.option('--n', 'n', type=int, required=True, help='2 or 3, the only published densities.')
@click.option('--points', type=click.IntRange(min=2), default=101, show_default=True)
@click.option('--samples', type=click.IntRange(min=0), default=0, show_default=True,
              help='When positive, a Monte Carlo histogram of W1 is emitted next to the density.')
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Defaults to MC_SEED.')
@click.option('--bins', type=click.IntRange(min=1), default=None)
@envelope_command()
def density_curve(n, points, samples, seed, bins, digits):
    """Samples the published density of X_n on an even grid, with its exact diagnostics."""
    diagnostics = density_diagnostics(n)
    seed = current_app.config['MC_SEED'] if seed is None else seed
    bins = bins or current_app.config['MC_BINS']
    envelope = OutputEnvelope(command='density', parameters={
        'n': n, 'points': points, 'samples': samples, 'seed': seed, 'bins': bins, 'digits': digits})
    for i in range(points):
        t = Fraction((n - 1) * i, points - 1)
        value = density(n, t)
        envelope.exact_values.append({'t': exact_str(t), 'density': exact_str(value)})
        envelope.float_values.append({'t': round_sig(t, digits), 'density': round_sig(value, digits)})
    envelope.results.update({
        'mass': exact_str(diagnostics.mass),
        'mean': exact_str(diagnostics.mean),
        'continuity_gap_at_1': (None if diagnostics.continuity_gap_at_1 is None
                                else exact_str(diagnostics.continuity_gap_at_1)),
    })
    if samples:
        estimate = estimate_moments(n, samples, seed, bins=bins)
        envelope.results['histogram'] = [
            {'bin_left': round_sig(left, digits), 'bin_right': round_sig(right, digits),
             'density': round_sig(count / (samples * (right - left)), digits)}
            for left, right, count in estimate.histogram
        ]
    return envelope
