# import "objects" from "this" project
from __init__ import app  # Key Flask object

# command blueprints, each carries its click commands
from api.moments import moments_api
from api.polynomials import polynomials_api
from api.recurrence import recurrence_api
from api.montecarlo import montecarlo_api
from api.verify import verify_api

# register the commands on app.cli (cli_group=None merges them at the top level)
app.register_blueprint(moments_api)
app.register_blueprint(polynomials_api)
app.register_blueprint(recurrence_api)
app.register_blueprint(montecarlo_api)
app.register_blueprint(verify_api)

# this runs the command line, e.g. `python main.py moments --n-min 2 --n-max 10 --format csv`
if __name__ == "__main__":
    with app.app_context():
        app.cli.main(prog_name="emd")
