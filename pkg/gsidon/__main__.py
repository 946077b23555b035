from gsidon.cli import main

main()
