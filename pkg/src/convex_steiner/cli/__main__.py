from convex_steiner.cli.main import main

main()
