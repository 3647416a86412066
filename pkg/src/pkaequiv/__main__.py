from pkaequiv.cli import main

main()
