import click
from flask import Blueprint

from api.options import envelope_command
from model.envelope import OutputEnvelope, exact_str, round_sig
from model.errors import DomainError
from model.moment_engine import build_F, build_G, volume_poly

polynomials_api = Blueprint('polynomials_api', __name__, cli_group=None)

BUILDERS = {'F': build_F, 'G': build_G, 'V': volume_poly}


@polynomials_api.cli.command('poly')
@click.option('--n', 'n', type=int, required=True)
@click.option('--which', type=click.Choice(sorted(BUILDERS)), default='F', show_default=True)
@envelope_command()
def poly(n, which, digits):
    """Lists the monomials of F_n, G_n or V_n in descending s-degree."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    p = BUILDERS[which](n)
    envelope = OutputEnvelope(command='poly', parameters={'n': n, 'which': which, 'digits': digits})
    envelope.results['polynomial'] = str(p)
    for (deg_s, deg_t), c in p.sorted_terms():
        envelope.exact_values.append({'deg_s': deg_s, 'deg_t': deg_t, 'coefficient': exact_str(c)})
        envelope.float_values.append({'deg_s': deg_s, 'deg_t': deg_t, 'coefficient': round_sig(c, digits)})
    return envelope
