from vqcube.cli import cli
from vqcube.logging_setup import log


def main() -> None:
    """Console-script entry point."""
    cli(prog_name="vqcube")


if __name__ == "__main__":
    try:
        main()
    except Exception as e:
        log.error(f"vqcube failed: {e}")
        raise
