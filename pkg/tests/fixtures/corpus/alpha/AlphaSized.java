package alpha ;

/** Sized things of alpha. */
public interface AlphaSized {
    int size ( int k ) ;
}
