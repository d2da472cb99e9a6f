#!/usr/bin/env python
"""fairreps command-line utility."""

import os


def main() -> None:
    """Run the command line with the default settings module unless one is set."""
    os.environ.setdefault("FAIRREPS_SETTINGS_MODULE", "config.settings.base")

    from fairreps.cli.commands import main as run_cli  # noqa: PLC0415

    run_cli()


if __name__ == "__main__":
    main()
