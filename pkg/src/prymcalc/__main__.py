"""Entry point for `python -m prymcalc`."""

from prymcalc.cli.main import app

if __name__ == "__main__":
    app()
