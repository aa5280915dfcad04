from bsymbol.cli import main

main()
