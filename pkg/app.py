import sys
from typing import List, Optional

import click

from commands.bounds import bounds
from commands.construct import construct
from commands.exact import exact
from commands.pivot import pivot
from commands.table import table
from commands.verify import verify
from utils.myutils import configure_logging


@click.group()
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (default from IBF_LOG_LEVEL).")
def cli(log_level: Optional[str]):
    """Build, verify and bound induced-bisecting families of bicolorings."""
    configure_logging(log_level)


cli.add_command(construct)
cli.add_command(verify)
cli.add_command(bounds)
cli.add_command(exact)
cli.add_command(pivot)
cli.add_command(table)


def run(argv: Optional[List[str]] = None) -> int:
    """Invoke the CLI and hand back its exit code instead of exiting."""
    try:
        cli.main(args=argv, prog_name="ibf", standalone_mode=True)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else (0 if e.code is None else 1)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
