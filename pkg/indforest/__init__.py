"""indforest command-line application factory."""
import os

import click

from indforest.cli import register_commands
from indforest.core.config import config_by_name, get_settings
from indforest.utils.logging import configure_logging


def create_cli(config_name=None):
    """
    Create the indforest click group with the specified configuration.

    Args:
        config_name: Configuration environment name

    Returns:
        click group
    """

    @click.group()
    @click.option(
        "--env",
        type=click.Choice(sorted(config_by_name)),
        default=None,
        help="Settings profile (default INDFOREST_ENV or development)",
    )
    @click.option("--log-level", default=None, help="Override LOG_LEVEL")
    @click.pass_context
    def cli(ctx, env, log_level):
        """Induced forests in bipartite planar graphs."""
        # Determine environment; worker processes read it back from os.environ
        env = env or config_name or os.getenv("INDFOREST_ENV", "development")
        os.environ["INDFOREST_ENV"] = env

        # Load configuration from pydantic settings
        settings = get_settings(env)
        if log_level:
            settings = settings.model_copy(update={"LOG_LEVEL": log_level.upper()})

        # Configure logging
        configure_logging(settings)
        ctx.obj = settings

    register_commands(cli)
    return cli
