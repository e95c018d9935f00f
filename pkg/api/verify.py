import click
from flask import Blueprint, current_app

from api.options import envelope_command
from model.envelope import OutputEnvelope
from model.verification import audit_notes, run_suites

verify_api = Blueprint('verify_api', __name__, cli_group=None)


@verify_api.cli.command('verify')
@click.option('--level', type=click.Choice(['fast', 'full']), default='fast', show_default=True)
@envelope_command(exit_code=lambda envelope: 0 if envelope.results['passed'] else 1)
def verify(level, digits):
    """Runs every cross-check suite; exits 1 and names the first failing suite on failure."""
    results = run_suites(level)
    failed = [r.suite for r in results if not r.passed]
    envelope = OutputEnvelope(command='verify', parameters={'level': level, 'digits': digits})
    envelope.exact_values = [{'suite': r.suite, 'passed': r.passed, 'detail': r.detail} for r in results]
    envelope.results.update({
        'passed': not failed,
        'suites': len(results),
        'first_failure': failed[0] if failed else None,
        'notes': audit_notes(),
    })
    if failed:
        current_app.logger.error("verify %s: first failing suite is %s", level, failed[0])
    return envelope
