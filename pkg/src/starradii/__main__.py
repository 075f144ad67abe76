from starradii.cli import main

raise SystemExit(main())
