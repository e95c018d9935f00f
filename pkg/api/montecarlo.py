import click
from flask import Blueprint, current_app

from api.options import envelope_command
from model.envelope import OutputEnvelope, exact_str, round_sig
from model.moment_engine import first_moment, second_moment
from model.simplex_mc import estimate_moments

montecarlo_api = Blueprint('montecarlo_api', __name__, cli_group=None)


@montecarlo_api.cli.command('mc')
@click.option('--n', 'n', type=int, required=True)
@click.option('--samples', type=click.IntRange(min=1), default=100000, show_default=True)
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Defaults to MC_SEED.')
@click.option('--bins', type=click.IntRange(min=1), default=None, help='Defaults to MC_BINS.')
@click.option('--threads', type=click.IntRange(min=1), default=None, help='Defaults to MC_THREADS.')
@envelope_command()
def mc(n, samples, seed, bins, threads, digits):
    """Monte Carlo estimate of E(W1) and E(W1^2) next to the exact values."""
    seed = current_app.config['MC_SEED'] if seed is None else seed
    bins = bins or current_app.config['MC_BINS']
    estimate = estimate_moments(n, samples, seed, bins=bins, threads=threads)
    exact_first, exact_second = first_moment(n), second_moment(n)
    # threads is left out of the parameters: the output never depends on it
    envelope = OutputEnvelope(command='mc',
                              parameters={'n': n, 'samples': samples, 'seed': seed, 'bins': bins, 'digits': digits})
    envelope.results.update({
        'mean_w1': round_sig(estimate.mean_w1, digits),
        'mean_w1_sq': round_sig(estimate.mean_w1_sq, digits),
        'std_error_mean': round_sig(estimate.std_error_mean, digits),
        'std_error_sq': round_sig(estimate.std_error_sq, digits),
        'exact_first': exact_str(exact_first),
        'exact_second': exact_str(exact_second),
    })
    envelope.float_values = [
        {'bin_left': round_sig(left, digits), 'bin_right': round_sig(right, digits),
         'count': count, 'frequency': round_sig(count / samples, digits)}
        for left, right, count in estimate.histogram
    ]
    current_app.logger.info("mc n=%d mean %.6f (exact %.6f)", n, estimate.mean_w1, float(exact_first))
    return envelope
