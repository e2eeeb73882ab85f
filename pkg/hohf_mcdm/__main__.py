from hohf_mcdm import create_cli

if __name__ == "__main__":
    create_cli()(prog_name="hohf")
