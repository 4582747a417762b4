"""Console entry point for indforest."""
from indforest import create_cli


def main():
    create_cli()(prog_name="indforest")


if __name__ == "__main__":
    main()
