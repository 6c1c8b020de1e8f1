from mpm_tutte import main

main()
