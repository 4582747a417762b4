"""Command registration."""


def register_commands(cli):
    """
    Register the indforest commands.

    Args:
        cli: click group
    """
    # Import commands
    from .corpus import gen
    from .graphs import build, solve, verify_bound
    from .lab import check_inequalities
    from .structure import audit_command, detect_command, reduce_command

    # Register commands
    for command in (
        solve,
        verify_bound,
        audit_command,
        detect_command,
        reduce_command,
        build,
        check_inequalities,
        gen,
    ):
        cli.add_command(command)
