"""Command-line orchestration of the pipeline: skorohod-run."""
from .config import RunConfig, SUBCOMMANDS
from .commands import (run_command, cmd_build, cmd_verify, cmd_density,
                       cmd_check, cmd_plot, write_manifest)
from .main import main, parse_config


__all__ = ["RunConfig", "SUBCOMMANDS", "run_command", "cmd_build",
           "cmd_verify", "cmd_density", "cmd_check", "cmd_plot",
           "write_manifest", "main", "parse_config"]
