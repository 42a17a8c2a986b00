from coxpoly.cli.main import main, build_parser, EXIT_OK, EXIT_VERIFICATION_FAILED, EXIT_USAGE, EXIT_DOMAIN
