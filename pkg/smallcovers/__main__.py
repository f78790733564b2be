from smallcovers.cli import main

main()
